#include <graphlabel/labels_io.hpp>

#include <graphlabel/error.hpp>

#include <fstream>

#include <json.hpp>

namespace graphlabel {

namespace {

    const std::string b64_alphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

    std::string base64_encode(const std::vector<std::uint8_t> & data)
    {
        std::string out;
        out.reserve((data.size() + 2) / 3 * 4);
        for (std::size_t i = 0; i < data.size(); i += 3) {
            std::uint32_t chunk = data[i] << 16;
            if (i + 1 < data.size())
                chunk |= data[i + 1] << 8;
            if (i + 2 < data.size())
                chunk |= data[i + 2];
            out.push_back(b64_alphabet[(chunk >> 18) & 0x3f]);
            out.push_back(b64_alphabet[(chunk >> 12) & 0x3f]);
            out.push_back(i + 1 < data.size() ? b64_alphabet[(chunk >> 6) & 0x3f] : '=');
            out.push_back(i + 2 < data.size() ? b64_alphabet[chunk & 0x3f] : '=');
        }
        return out;
    }

    std::vector<std::uint8_t> base64_decode(const std::string & text)
    {
        std::vector<int> value(256, -1);
        for (int i = 0; i < 64; ++i)
            value[static_cast<unsigned char>(b64_alphabet[i])] = i;
        std::vector<std::uint8_t> out;
        std::uint32_t buffer = 0;
        int bits = 0;
        for (char c : text) {
            if (c == '=')
                break;
            const int v = value[static_cast<unsigned char>(c)];
            if (v < 0)
                throw Error("invalid base64 character");
            buffer = (buffer << 6) | static_cast<std::uint32_t>(v);
            bits += 6;
            if (bits >= 8) {
                bits -= 8;
                out.push_back(static_cast<std::uint8_t>((buffer >> bits) & 0xff));
            }
        }
        return out;
    }

    std::vector<std::uint8_t> pack_bits(const std::vector<Bits> & rows, int width)
    {
        std::vector<std::uint8_t> bytes((static_cast<std::size_t>(rows.size()) * width + 7) / 8, 0);
        std::size_t bit = 0;
        for (const auto & row : rows) {
            for (int i = 0; i < width; ++i, ++bit)
                if (i < static_cast<int>(row.size()) && row[i] == '1')
                    bytes[bit / 8] |= static_cast<std::uint8_t>(1u << (7 - bit % 8));
        }
        return bytes;
    }

    std::vector<Bits> unpack_bits(const std::vector<std::uint8_t> & bytes, int n, int width)
    {
        if (bytes.size() * 8 < static_cast<std::size_t>(n) * width)
            throw Error("sketch data too short");
        std::vector<Bits> rows(n);
        std::size_t bit = 0;
        for (auto & row : rows) {
            row.resize(width);
            for (int i = 0; i < width; ++i, ++bit)
                row[i] = (bytes[bit / 8] >> (7 - bit % 8)) & 1 ? '1' : '0';
        }
        return rows;
    }

    nlohmann::ordered_json params_to_json(const std::map<std::string, std::int64_t> & params)
    {
        nlohmann::ordered_json out = nlohmann::ordered_json::object();
        for (const auto & [key, value] : params)
            out[key] = value;
        return out;
    }

    std::map<std::string, std::int64_t> params_from_json(const nlohmann::json & doc)
    {
        std::map<std::string, std::int64_t> out;
        for (const auto & [key, value] : doc.items())
            out[key] = value.get<std::int64_t>();
        return out;
    }

    void check_version_and_decoder(const nlohmann::json & doc)
    {
        if (doc.at("version").get<int>() != 1)
            throw Error("unsupported label dump version");
        const std::string decoder = doc.at("decoder").get<std::string>();
        static const char * known[] = {"or_first_vs_rest", "or_rank_sum", "or_any", "windowed_rank_sum",
            "shrubdepth_lca", "id_equality"};
        for (const char * name : known)
            if (decoder == name)
                return;
        throw Error("unknown decoder: " + decoder);
    }

    void write_json(const nlohmann::ordered_json & doc, const std::string & path)
    {
        std::ofstream out(path);
        if (! out)
            throw Error("cannot write " + path);
        out << doc.dump(2) << '\n';
        if (! out)
            throw Error("write failed: " + path);
    }

    nlohmann::json read_json(const std::string & path)
    {
        std::ifstream in(path);
        if (! in)
            throw Error("cannot read " + path);
        nlohmann::json doc;
        try {
            in >> doc;
        }
        catch (const nlohmann::json::exception & e) {
            throw Error("malformed JSON in " + path + ": " + e.what());
        }
        return doc;
    }

} // namespace

void serialize_labels(const LabelScheme & scheme, const std::string & path)
{
    nlohmann::ordered_json doc;
    doc["version"] = 1;
    doc["decoder"] = scheme.decoder_id;
    doc["params"] = params_to_json(scheme.params);
    doc["disjunctive"] = scheme.disjunctive;
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    for (const auto & label : scheme.labels) {
        nlohmann::ordered_json parts = nlohmann::ordered_json::array();
        for (const auto & part : label.parts) {
            nlohmann::ordered_json entry = nlohmann::ordered_json::array();
            entry.push_back(part.prefix);
            for (Code code : part.codes)
                entry.push_back(code);
            parts.push_back(std::move(entry));
        }
        labels.push_back(std::move(parts));
    }
    doc["labels"] = std::move(labels);
    write_json(doc, path);
}

void serialize_labels(const Sketcher & sketch, const std::string & path)
{
    if (sketch.decoder_id == "majority")
        throw Error("majority sketches do not serialize; store the copies instead");
    nlohmann::ordered_json doc;
    doc["version"] = 1;
    doc["decoder"] = sketch.decoder_id;
    doc["params"] = params_to_json(sketch.params);
    doc["one_sided"] = sketch.one_sided;
    doc["n"] = sketch.vertex_count();
    doc["bits_per_vertex"] = sketch.size_bits;
    doc["data"] = base64_encode(pack_bits(sketch.bits, sketch.size_bits));
    write_json(doc, path);
}

namespace {
    std::variant<LabelScheme, StoredSketch> deserialize_parsed(const nlohmann::json & doc);
}

std::variant<LabelScheme, StoredSketch> deserialize_labels(const std::string & path)
{
    const nlohmann::json doc = read_json(path);
    try {
        return deserialize_parsed(doc);
    }
    catch (const nlohmann::json::exception & e) {
        throw Error("malformed label dump " + path + ": " + e.what());
    }
}

namespace {

std::variant<LabelScheme, StoredSketch> deserialize_parsed(const nlohmann::json & doc)
{
    check_version_and_decoder(doc);

    if (doc.contains("labels")) {
        LabelScheme scheme;
        scheme.decoder_id = doc.at("decoder").get<std::string>();
        scheme.params = params_from_json(doc.at("params"));
        scheme.disjunctive = doc.at("disjunctive").get<bool>();
        for (const auto & parts : doc.at("labels")) {
            EqLabel label;
            for (const auto & entry : parts) {
                LabelPart part;
                part.prefix = entry.at(0).get<std::string>();
                for (char c : part.prefix)
                    if (c != '0' && c != '1')
                        throw Error("prefix is not a bit string");
                for (std::size_t i = 1; i < entry.size(); ++i)
                    part.codes.push_back(entry.at(i).get<Code>());
                label.parts.push_back(std::move(part));
            }
            scheme.labels.push_back(std::move(label));
        }
        return scheme;
    }

    StoredSketch sketch;
    sketch.decoder_id = doc.at("decoder").get<std::string>();
    sketch.params = params_from_json(doc.at("params"));
    sketch.one_sided = doc.at("one_sided").get<bool>();
    sketch.size_bits = doc.at("bits_per_vertex").get<int>();
    const int n = doc.at("n").get<int>();
    sketch.bits = unpack_bits(base64_decode(doc.at("data").get<std::string>()), n, sketch.size_bits);
    return sketch;
}

} // namespace

} // namespace graphlabel
