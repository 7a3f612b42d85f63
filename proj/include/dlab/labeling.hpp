#pragma once

#include <dlab/graph.hpp>

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace dlab {

using Label = int;

// Vertex-indexed nonnegative labels.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::vector<Label> labels);

    const std::vector<Label> & labels() const noexcept { return _labels; }
    Label operator[](Vertex v) const { return _labels.at(v); }
    int size() const noexcept { return static_cast<int>(_labels.size()); }
    Label max_label() const;

    friend bool operator==(const Labeling &, const Labeling &) = default;

private:
    std::vector<Label> _labels;
};

// A strictly increasing set of nonnegative integers.
class DeltaSet {
public:
    DeltaSet() = default;
    explicit DeltaSet(std::vector<int> values);

    const std::vector<int> & values() const noexcept { return _values; }
    int size() const noexcept { return static_cast<int>(_values.size()); }
    bool empty() const noexcept { return _values.empty(); }
    int max() const { return _values.back(); }
    bool contains(int v) const;
    int nonzero_count() const;

    friend bool operator==(const DeltaSet &, const DeltaSet &) = default;

private:
    std::vector<int> _values;
};

std::string to_string(const DeltaSet & s);

// Image must be exactly [0,l] or [1,l].
struct LengthKind {
    int l;
};

// Image must be exactly J.
struct SetKind {
    DeltaSet j;
};

using LabelSetKind = std::variant<LengthKind, SetKind>;

struct VerificationReport {
    bool valid = false;
    std::vector<Label> image;
    bool proper = false;
    // Common multiplicity of every nonzero label, when there is one.
    std::optional<int> regular_degree;
    std::optional<std::string> first_violation;
};

// Checks the label image against kind and that every pair of equally labelled
// vertices sits at distance equal to the label. Distance violations are reported
// for the lexicographically least offending vertex pair. Throws
// std::invalid_argument on a length mismatch.
VerificationReport verify_labeling(const Graph & g, const Labeling & f, const LabelSetKind & kind);

// For a valid proper labeling: max label <= diameter. Throws std::invalid_argument
// if f is not a valid proper labeling for kind.
bool proper_diameter_check(const Graph & g, const Labeling & f, const LabelSetKind & kind);

}
