#include <graphlabel/eqlabel.hpp>

#include <graphlabel/error.hpp>

#include <algorithm>

namespace graphlabel {

int EqLabel::prefix_bits() const
{
    int total = 0;
    for (const auto & part : parts)
        total += static_cast<int>(part.prefix.size());
    return total;
}

int EqLabel::part_count() const { return static_cast<int>(parts.size()); }

int EqLabel::code_count() const
{
    int total = 0;
    for (const auto & part : parts)
        total += static_cast<int>(part.codes.size());
    return total;
}

int LabelScheme::max_prefix_bits() const
{
    int best = 0;
    for (const auto & label : labels)
        best = std::max(best, label.prefix_bits());
    return best;
}

int LabelScheme::max_parts() const
{
    int best = 0;
    for (const auto & label : labels)
        best = std::max(best, label.part_count());
    return best;
}

int LabelScheme::max_codes() const
{
    int best = 0;
    for (const auto & label : labels)
        best = std::max(best, label.code_count());
    return best;
}

bool PairView::parts_intersect(int pa, int pb) const
{
    for (int i = 0; i < codes_a(pa); ++i)
        for (int j = 0; j < codes_b(pb); ++j)
            if (eq(pa, i, pb, j))
                return true;
    return false;
}

namespace {

    int decode_or_first_vs_rest(const PairView & view)
    {
        if (view.parts_a() != 1 || view.parts_b() != 1)
            throw Error("or_first_vs_rest expects single-part labels");
        for (int j = 1; j < view.codes_b(0); ++j)
            if (view.eq(0, 0, 0, j))
                return 1;
        for (int i = 1; i < view.codes_a(0); ++i)
            if (view.eq(0, i, 0, 0))
                return 1;
        return 0;
    }

    int decode_or_rank_sum(const PairView & view, int r)
    {
        for (int i = 0; i <= r && i < view.parts_a(); ++i)
            for (int j = 0; i + j <= r && j < view.parts_b(); ++j)
                if (view.parts_intersect(i, j))
                    return 1;
        return 0;
    }

    int decode_or_any(const PairView & view)
    {
        for (int i = 0; i < view.parts_a(); ++i)
            for (int j = 0; j < view.parts_b(); ++j)
                if (view.parts_intersect(i, j))
                    return 1;
        return 0;
    }

    int decode_windowed_rank_sum(const PairView & view, int r)
    {
        const int block = r + 1;
        for (int a = 0; a < view.parts_a(); ++a) {
            const int rank_a = a % block;
            for (int b = 0; b < view.parts_b(); ++b) {
                if (rank_a + (b % block) > r)
                    continue;
                if (view.prefix_a(a) != view.prefix_b(b))
                    continue; // different windows
                if (view.parts_intersect(a, b))
                    return 1;
            }
        }
        return 0;
    }

    int decode_shrubdepth(const PairView & view, int depth, int colors)
    {
        const int color_width = ceil_log2(static_cast<std::uint64_t>(colors));
        auto color_a = [&](int part) {
            std::size_t pos = 0;
            return color_width == 0 ? 0 : static_cast<int>(read_bits(view.prefix_a(part), pos, color_width));
        };
        auto color_b = [&](int part) {
            std::size_t pos = 0;
            return color_width == 0 ? 0 : static_cast<int>(read_bits(view.prefix_b(part), pos, color_width));
        };
        if (view.parts_a() != depth + 2 || view.parts_b() != depth + 2)
            throw Error("shrubdepth label has wrong part count");
        for (int i = 1; i <= depth; ++i) {
            if (! view.eq(i + 1, 0, i + 1, 0))
                continue;
            const int a = color_a(1), b = color_b(1), c = color_a(i + 1);
            const Bits & phi = view.prefix_a(0);
            const std::size_t idx = (static_cast<std::size_t>(a) * colors + b) * colors + c;
            if (idx >= phi.size())
                throw Error("truth table too short");
            return phi[idx] == '1' ? 1 : 0;
        }
        return 0;
    }

} // namespace

int decode_pair(const std::string & decoder_id, const std::map<std::string, std::int64_t> & params,
        const PairView & view)
{
    auto param = [&](const std::string & name) {
        auto it = params.find(name);
        if (it == params.end())
            throw Error("decoder parameter missing: " + name);
        return static_cast<int>(it->second);
    };
    if (decoder_id == "or_first_vs_rest")
        return decode_or_first_vs_rest(view);
    if (decoder_id == "or_rank_sum")
        return decode_or_rank_sum(view, param("r"));
    if (decoder_id == "or_any")
        return decode_or_any(view);
    if (decoder_id == "windowed_rank_sum")
        return decode_windowed_rank_sum(view, param("r"));
    if (decoder_id == "shrubdepth_lca")
        return decode_shrubdepth(view, param("depth"), param("colors"));
    throw Error("unknown decoder: " + decoder_id);
}

bool decoder_is_disjunctive(const std::string & decoder_id)
{
    return decoder_id == "or_first_vs_rest" || decoder_id == "or_rank_sum" || decoder_id == "or_any" ||
        decoder_id == "windowed_rank_sum";
}

int label_bits(const EqLabel & label, int code_width)
{
    return static_cast<int>(label_to_bits(label, code_width).size());
}

Bits label_to_bits(const EqLabel & label, int code_width)
{
    Bits out;
    append_varint(out, label.parts.size());
    for (const auto & part : label.parts) {
        append_varint(out, part.prefix.size());
        out += part.prefix;
        append_varint(out, part.codes.size());
        for (Code code : part.codes) {
            if (code_width == 0)
                append_varint(out, code);
            else
                append_bits(out, code, code_width);
        }
    }
    return out;
}

EqLabel label_from_bits(const Bits & bits, int code_width)
{
    EqLabel label;
    std::size_t pos = 0;
    const std::uint64_t parts = read_varint(bits, pos);
    for (std::uint64_t p = 0; p < parts; ++p) {
        LabelPart part;
        const std::uint64_t prefix_len = read_varint(bits, pos);
        if (pos + prefix_len > bits.size())
            throw Error("bit string truncated");
        part.prefix = bits.substr(pos, prefix_len);
        pos += prefix_len;
        const std::uint64_t codes = read_varint(bits, pos);
        for (std::uint64_t c = 0; c < codes; ++c)
            part.codes.push_back(code_width == 0 ? read_varint(bits, pos) : read_bits(bits, pos, code_width));
        label.parts.push_back(std::move(part));
    }
    return label;
}

int scheme_size_bits(const LabelScheme & scheme)
{
    int best = 0;
    for (const auto & label : scheme.labels)
        best = std::max(best, label_bits(label, 0));
    return best;
}

PairPredicate::PairPredicate(const Graph & g, int kind, int r1, int r2)
    : g_(&g), n_(g.vertex_count()), kind_(kind), r1_(r1), r2_(r2)
{
    if (kind_ == kDistBand) {
        // distances clamped to r2+1: enough to answer <= r1 / > r2
        const int clamp = r2_ + 1;
        clamped_dist_.reserve(n_);
        for (Vertex v = 0; v < n_; ++v) {
            auto row = bfs_distances(g, v).dist;
            std::vector<std::uint16_t> packed(n_);
            for (Vertex u = 0; u < n_; ++u)
                packed[u] = static_cast<std::uint16_t>(std::min(row[u], clamp));
            clamped_dist_.push_back(std::move(packed));
        }
    }
}

PairPredicate PairPredicate::adjacency(const Graph & g) { return PairPredicate(g, kAdjacency, 1, 1); }

PairPredicate PairPredicate::dist_leq(const Graph & g, int r)
{
    if (r < 0)
        throw Error("distance threshold must be nonnegative");
    return PairPredicate(g, kDistBand, r, r);
}

PairPredicate PairPredicate::dist_band(const Graph & g, int r1, int r2)
{
    if (r1 < 0 || r2 < r1)
        throw Error("need 0 <= r1 <= r2");
    return PairPredicate(g, kDistBand, r1, r2);
}

PairPredicate PairPredicate::adjacency_restricted(const Graph & h, std::vector<std::pair<Vertex, Vertex>> pairs)
{
    PairPredicate p(h, kRestricted, 1, 1);
    for (auto & [u, v] : pairs)
        if (u > v)
            std::swap(u, v);
    std::sort(pairs.begin(), pairs.end());
    p.restricted_ = std::move(pairs);
    return p;
}

int PairPredicate::operator()(Vertex x, Vertex y) const
{
    switch (kind_) {
    case kAdjacency:
        return g_->has_edge(x, y) ? 1 : 0;
    case kDistBand: {
        const int d = clamped_dist_[x][y];
        if (d <= r1_)
            return 1;
        if (d > r2_)
            return 0;
        return star;
    }
    case kRestricted: {
        auto key = std::minmax(x, y);
        if (! std::binary_search(restricted_.begin(), restricted_.end(), std::make_pair(key.first, key.second)))
            return star;
        return g_->has_edge(x, y) ? 1 : 0;
    }
    }
    throw Error("bad predicate kind");
}

} // namespace graphlabel
