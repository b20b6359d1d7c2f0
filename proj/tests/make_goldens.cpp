// Regenerates the committed golden files. Run with the golden directory as
// the only argument after changing any output format on purpose.

#include <fstream>
#include <iostream>

#include "ncfact/export.hpp"

using namespace ncfact;

namespace {

void write_file(const std::string& dir, const std::string& name, const std::string& content) {
  std::ofstream out(dir + "/" + name, std::ios::binary);
  out << content;
  std::cout << name << ": " << content.size() << " bytes\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_goldens <golden-dir>\n";
    return 2;
  }
  const std::string dir = argv[1];

  SymmetricGroup sym3(3);
  IntegerGroup ints;

  auto sym3_linear = enumerate_linear(sym3, delta(3));
  auto sym3_circular = enumerate_circular(sym3, sym3_linear);
  auto int2_linear = enumerate_linear(ints, 2LL);
  auto int2_circular = enumerate_circular(ints, int2_linear);

  write_file(dir, "fact_sym3_linear.dot",
             hasse_to_dot("fact-linear", sym3_linear.keys, sym3_linear.covers));
  write_file(dir, "comp_int2_linear.dot",
             hasse_to_dot("comp-linear", int2_linear.keys, int2_linear.covers));
  write_file(dir, "fact_sym3_circular.dot",
             hasse_to_dot("fact-circular", sym3_circular.keys, sym3_circular.covers));
  write_file(dir, "comp_int2_circular.dot",
             hasse_to_dot("comp-circular", int2_circular.keys, int2_circular.covers));

  write_file(dir, "order_sym3.json", complex_to_json(build_order_complex(sym3, delta(3)).summary));
  write_file(dir, "interval_sym3.json",
             complex_to_json(build_interval_complex(sym3, delta(3)).summary));

  write_file(dir, "enumerate_sym3_linear.txt",
             poset_report(sym3_linear.keys, sym3_linear.ranks, sym3_linear.rank_counts));
  write_file(dir, "enumerate_int2_circular.txt",
             poset_report(int2_circular.keys, int2_circular.ranks, int2_circular.rank_counts));
  write_file(dir, "complex_interval_sym3.txt",
             complex_report(build_interval_complex(sym3, delta(3)).summary));

  auto figure = make_ncs_partition(
      12, {{parse_rational("1/10"), SetPartition(12, {{4, 5}})},
           {parse_rational("2/5"), SetPartition(12, {{1, 2, 3, 11}})},
           {parse_rational("1/2"), SetPartition(12, {{3, 6, 8}, {11, 12}})},
           {parse_rational("9/10"), SetPartition(12, {{8, 9, 10}})}});
  write_file(dir, "figure1.json", ncs_to_json(figure));
  write_file(dir, "figure1.svg", render_ncs_svg(figure));
  write_file(dir, "figure1_panel.svg", render_ncs_svg(figure, true));
  return 0;
}
