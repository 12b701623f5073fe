#include <graphlabel/sketch.hpp>

#include <graphlabel/error.hpp>
#include <graphlabel/rng.hpp>

#include <algorithm>
#include <memory>

namespace graphlabel {

namespace {
    Sketcher compile_shared(std::shared_ptr<const LabelScheme> scheme, std::uint64_t seed, int w)
    {
        const int code_width = ceil_log2(static_cast<std::uint64_t>(w));

        Sketcher sk;
        sk.decoder_id = scheme->decoder_id;
        sk.params = scheme->params;
        sk.params["w"] = w;
        sk.params["code_width"] = code_width;
        sk.one_sided = scheme->disjunctive;
        sk.seed = seed;
        sk.hashed.reserve(scheme->labels.size());
        for (const auto & label : scheme->labels) {
            EqLabel hashed = label;
            for (auto & part : hashed.parts)
                for (auto & code : part.codes)
                    code = keyed_hash(seed, code) % static_cast<std::uint64_t>(w);
            sk.bits.push_back(label_to_bits(hashed, code_width));
            sk.size_bits = std::max(sk.size_bits, static_cast<int>(sk.bits.back().size()));
            sk.hashed.push_back(std::move(hashed));
        }
        sk.resample = [scheme = std::move(scheme), w](std::uint64_t s) { return compile_shared(scheme, s, w); };
        return sk;
    }
}

Sketcher compile_sketch(const LabelScheme & scheme, std::uint64_t seed, int w)
{
    const int k = scheme.max_codes();
    if (w == 0)
        w = std::max(2, 3 * k * k);
    if (w < 2)
        throw Error("hash range must be at least 2");
    return compile_shared(std::make_shared<const LabelScheme>(scheme), seed, w);
}

int decode_sketch(const Sketcher & sketch, Vertex x, Vertex y)
{
    if (sketch.decoder_id == "majority") {
        int ones = 0;
        for (const auto & copy : sketch.inner)
            ones += decode_sketch(copy, x, y);
        return 2 * ones > static_cast<int>(sketch.inner.size()) ? 1 : 0;
    }
    if (sketch.decoder_id == "id_equality")
        return sketch.bits.at(x) == sketch.bits.at(y) ? 1 : 0;
    return decode_pair(sketch.decoder_id, sketch.params, PairView(sketch.hashed.at(x), sketch.hashed.at(y)));
}

Sketcher boost_majority(const Sketcher & base, int copies, std::uint64_t seed)
{
    if (copies < 1 || copies % 2 == 0)
        throw Error("majority needs an odd positive number of copies");
    if (! base.resample)
        throw Error("sketch does not support resampling");

    Sketcher boosted;
    boosted.decoder_id = "majority";
    boosted.params["copies"] = copies;
    boosted.seed = seed;
    for (int c = 0; c < copies; ++c)
        boosted.inner.push_back(base.resample(keyed_hash(seed, c)));
    boosted.one_sided = boosted.inner.front().one_sided;

    const int n = boosted.inner.front().vertex_count();
    for (Vertex v = 0; v < n; ++v) {
        Bits combined;
        append_varint(combined, copies);
        for (const auto & copy : boosted.inner) {
            append_varint(combined, copy.bits.at(v).size());
            combined += copy.bits.at(v);
        }
        boosted.size_bits = std::max(boosted.size_bits, static_cast<int>(combined.size()));
        boosted.bits.push_back(std::move(combined));
    }

    auto inner_resample = base.resample;
    boosted.resample = [inner_resample, copies](std::uint64_t s) {
        Sketcher proto;
        proto.resample = inner_resample;
        return boost_majority(proto, copies, s);
    };
    return boosted;
}

int StoredSketch::decode(Vertex x, Vertex y) const
{
    return decode_sketch_bits(decoder_id, params, bits.at(x), bits.at(y));
}

int decode_sketch_bits(const std::string & decoder_id, const std::map<std::string, std::int64_t> & params,
        const Bits & x_bits, const Bits & y_bits)
{
    if (decoder_id == "id_equality")
        return x_bits == y_bits ? 1 : 0;
    auto it = params.find("code_width");
    if (it == params.end())
        throw Error("sketch parameters missing code_width");
    const int code_width = static_cast<int>(it->second);
    const EqLabel a = label_from_bits(x_bits, code_width);
    const EqLabel b = label_from_bits(y_bits, code_width);
    return decode_pair(decoder_id, params, PairView(a, b));
}

} // namespace graphlabel
