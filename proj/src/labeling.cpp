#include <dlab/labeling.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dlab {

Labeling::Labeling(std::vector<Label> labels) :
    _labels(std::move(labels))
{
    for (std::size_t v = 0; v < _labels.size(); ++v)
        if (_labels[v] < 0)
            throw std::invalid_argument("label of vertex " + std::to_string(v) + " is negative");
}

Label Labeling::max_label() const
{
    return _labels.empty() ? 0 : *std::max_element(_labels.begin(), _labels.end());
}

DeltaSet::DeltaSet(std::vector<int> values) :
    _values(std::move(values))
{
    for (std::size_t i = 0; i < _values.size(); ++i) {
        if (_values[i] < 0)
            throw std::invalid_argument("set values must be nonnegative");
        if (i > 0 && _values[i] <= _values[i - 1])
            throw std::invalid_argument("set values must be strictly increasing");
    }
}

bool DeltaSet::contains(int v) const
{
    return std::binary_search(_values.begin(), _values.end(), v);
}

int DeltaSet::nonzero_count() const
{
    return size() - (contains(0) ? 1 : 0);
}

std::string to_string(const DeltaSet & s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.values().size(); ++i)
        out += (i ? "," : "") + std::to_string(s.values()[i]);
    return out + "}";
}

namespace {
    std::string image_text(const std::vector<Label> & image)
    {
        std::string out = "{";
        for (std::size_t i = 0; i < image.size(); ++i)
            out += (i ? "," : "") + std::to_string(image[i]);
        return out + "}";
    }

    std::optional<std::string> image_violation(const std::vector<Label> & image, const LabelSetKind & kind)
    {
        if (auto len = std::get_if<LengthKind>(&kind)) {
            const int l = len->l;
            if (l < 1)
                return "length must be at least 1";
            auto matches_from = [&](int lo) {
                if (image.size() != static_cast<std::size_t>(l - lo + 1))
                    return false;
                for (std::size_t i = 0; i < image.size(); ++i)
                    if (image[i] != lo + static_cast<int>(i))
                        return false;
                return true;
            };
            if (matches_from(0) || matches_from(1))
                return std::nullopt;
            return "label image " + image_text(image) + " is neither [0," + std::to_string(l) + "] nor [1,"
                + std::to_string(l) + "]";
        }
        const auto & j = std::get<SetKind>(kind).j;
        if (image == j.values())
            return std::nullopt;
        return "label image " + image_text(image) + " differs from " + to_string(j);
    }
}

VerificationReport verify_labeling(const Graph & g, const Labeling & f, const LabelSetKind & kind)
{
    if (f.size() != g.order())
        throw std::invalid_argument("labeling has " + std::to_string(f.size()) + " entries but graph has order "
            + std::to_string(g.order()));

    std::map<Label, std::vector<Vertex>> classes;
    for (Vertex v = 0; v < g.order(); ++v)
        classes[f[v]].push_back(v);

    VerificationReport report;
    report.proper = true;
    std::optional<int> common;
    bool uniform = true;
    for (const auto & [label, members] : classes) {
        report.image.push_back(label);
        if (label == 0)
            continue;
        const int count = static_cast<int>(members.size());
        if (count < 2)
            report.proper = false;
        if (common && *common != count)
            uniform = false;
        common = count;
    }
    if (uniform && common && (*common == 1 || report.proper))
        report.regular_degree = common;

    if (auto bad = image_violation(report.image, kind)) {
        report.first_violation = *bad;
        return report;
    }

    std::optional<std::pair<Vertex, Vertex>> worst;
    int worst_distance = 0;
    for (const auto & [label, members] : classes) {
        if (members.size() < 2)
            continue;
        bool found = false;
        for (std::size_t a = 0; a + 1 < members.size() && ! found; ++a) {
            auto u = members[a];
            if (worst && u > worst->first)
                break;
            auto dist = bfs_distances(g, u);
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                auto v = members[b];
                if (dist[v] != label) {
                    if (! worst || std::pair{u, v} < *worst) {
                        worst = {u, v};
                        worst_distance = dist[v];
                    }
                    found = true;
                    break;
                }
            }
        }
    }

    if (worst) {
        report.first_violation = "vertices " + std::to_string(worst->first) + " and " + std::to_string(worst->second)
            + " share label " + std::to_string(f[worst->first]) + " but are at distance "
            + std::to_string(worst_distance);
        return report;
    }

    report.valid = true;
    return report;
}

bool proper_diameter_check(const Graph & g, const Labeling & f, const LabelSetKind & kind)
{
    auto report = verify_labeling(g, f, kind);
    if (! report.valid || ! report.proper)
        throw std::invalid_argument("proper_diameter_check needs a valid proper labeling");
    return f.max_label() <= all_pairs_distances(g).diameter();
}

}
