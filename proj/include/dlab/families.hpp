#pragma once

#include <dlab/graph.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dlab {

enum class Family {
    path,
    cycle,
    complete,
    star,
    complete_bipartite,
    spider,
    wheel,
    fan,
    caterpillar,
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

// Parameters per family:
//   path/cycle/complete/wheel/fan: n
//   star: k (number of leaves)
//   complete_bipartite: m, n (part sizes)
//   spider: k arms of n vertices each
//   caterpillar: spine[i] = number of leaves hanging off spine vertex i
struct FamilySpec {
    Family family = Family::path;
    int n = 0;
    int m = 0;
    int k = 0;
    std::vector<int> spine;

    static FamilySpec path(int n) { return {Family::path, n, 0, 0, {}}; }
    static FamilySpec cycle(int n) { return {Family::cycle, n, 0, 0, {}}; }
    static FamilySpec complete(int n) { return {Family::complete, n, 0, 0, {}}; }
    static FamilySpec star(int k) { return {Family::star, 0, 0, k, {}}; }
    static FamilySpec complete_bipartite(int m, int n) { return {Family::complete_bipartite, n, m, 0, {}}; }
    static FamilySpec spider(int k, int n) { return {Family::spider, n, 0, k, {}}; }
    static FamilySpec wheel(int n) { return {Family::wheel, n, 0, 0, {}}; }
    static FamilySpec fan(int n) { return {Family::fan, n, 0, 0, {}}; }
    static FamilySpec caterpillar(std::vector<int> leaves) { return {Family::caterpillar, 0, 0, 0, std::move(leaves)}; }
};

// Throws std::invalid_argument when the parameters are outside the family's domain.
void validate(const FamilySpec & spec);

// Human-readable name, e.g. "S_4^5" or "K_{2,3}".
std::string describe(const FamilySpec & spec);

Graph gen_family(const FamilySpec & spec);

// Vertex numbering used by gen_family for spiders: centre is 0, then arm by arm,
// each arm listed from the vertex next to the centre outwards. arm is 0-based,
// position is the distance from the centre (1..n).
constexpr Vertex spider_vertex(int n, int arm, int position) { return 1 + arm * n + (position - 1); }

// True iff g is a tree whose non-leaf vertices induce a path.
bool is_caterpillar(const Graph & g);

}
