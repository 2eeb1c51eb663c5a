#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "toughlab/graph.hpp"

namespace toughlab {

enum class Family {
  Complete,              // complete:n
  Path,                  // path:n
  Cycle,                 // cycle:n, n >= 3
  Star,                  // star:l = K_{1,l}
  DoubleStar,            // doublestar:a,b
  TripleStar,            // triplestar:a,b,c
  CompleteMultipartite,  // K:n1,...,nk with n1 <= ... <= nk
  Turan,                 // turan:n,k
  Wheel,                 // wheel:l = K_1 * C_{l-1}, l >= 5
  Net,                   // net = triplestar:1,1,1
  CoNet,                 // conet, the complement of the net
};

struct FamilySpec {
  Family family = Family::Complete;
  std::vector<int> params;

  bool operator==(const FamilySpec&) const = default;
};

// Parses "turan:8,4", "doublestar:2,3", "K:1,2,2", "net", ...
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);
// Throws ArgumentError when the parameters are outside the family's domain.
void validate(const FamilySpec& spec);

Graph make_named(const FamilySpec& spec);
Graph make_named(std::string_view text);

// Part sizes of the Turan graph T_{n,k}, ascending.
std::vector<int> turan_parts(int n, int k);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph double_star(int a, int b);
Graph triple_star(int a, int b, int c);
Graph complete_multipartite(const std::vector<int>& parts);
Graph turan_graph(int n, int k);
Graph wheel_graph(int l);

}  // namespace toughlab
