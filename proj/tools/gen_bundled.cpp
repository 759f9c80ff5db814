// Regenerates the bundled definition files under data/.
#include "ttba/catalog.hpp"
#include "ttba/io.hpp"

#include <iostream>

using namespace ttba;
namespace fs = std::filesystem;

int main(int argc, char** argv) {
  const fs::path dir = argc > 1 ? fs::path(argv[1]) : fs::path("data");
  fs::create_directories(dir);
  auto put = [&](const std::string& name, const Json& doc) {
    write_json(dir / name, doc);
    std::cout << (dir / name).string() << "\n";
  };

  put("scalar_triangular.json", triangular_to_json(scalar_triangular(), "upper triangular 2x2 over Q"));
  put("zero_offdiagonal.json", triangular_to_json(zero_offdiagonal_triangular(), "Q + Q with X = 0"));
  put("matrix_block.json", triangular_to_json(matrix_block_triangular(), "M2 / Q / M21 with inner twist"));
  put("c3_inversion.json", triangular_to_json(c3_inversion_triangular(), "Q[C3] with (inversion, id)"));

  const auto systems = anchored_examples();
  for (std::size_t i = 0; i < systems.size(); ++i)
    put("anchored_" + std::to_string(i + 1) + ".json", anchored_to_json(systems[i], "anchored example " + std::to_string(i + 1)));

  const AnchoredFunctionSystem swap{3, 1, 3, {0, 1, 2}, {0, 0, 0}, {1, 0, 2}, {0}};
  const AnchoredFunctionSystem swap2{3, 1, 3, {0, 1, 2}, {0, 0, 0}, {0, 2, 1}, {0}};
  const AnchoredFunctionSystem cycle{3, 1, 3, {0, 1, 2}, {0, 0, 0}, {1, 2, 0}, {0}};
  put("function_swap.json", anchored_to_json(swap, "transposition twist"));
  put("function_swap_conjugate.json", anchored_to_json(swap2, "conjugate transposition twist"));
  put("function_cycle.json", anchored_to_json(cycle, "3-cycle twist"));

  const FiniteGroup s3 = symmetric_group(3);
  const auto c12 = conjugation(s3, 2), c13 = conjugation(s3, 5);
  put("s3_group.json", group_to_json(s3, TwistPair{c12, c12, c13, c13}, "S3, conjugation by (12) against (13)"));
  const FiniteGroup c3 = cyclic_group(3);
  const GroupAutomorphism id{0, 1, 2};
  put("c3_group.json", group_to_json(c3, TwistPair{inversion(c3), id, id, id}, "C3, inversion against identity"));

  put("m2.json", algebra_to_json(*matrix_algebra(2), "M2(Q)"));
  put("q.json", algebra_to_json(*function_algebra(1), "Q"));
  put("q2.json", algebra_to_json(*function_algebra(2), "Q + Q"));
  put("qs3.json", algebra_to_json(*group_algebra(s3), "Q[S3]"));

  Json broken = algebra_to_json(*function_algebra(2), "Q + Q with a broken product");
  broken["structure"].push_back(Json::array({0, 0, 1, "1"}));
  put("broken_associativity.json", broken);
  Json bad = algebra_to_json(*function_algebra(1), "bad rational");
  bad["structure"][0][3] = "1/0";
  put("bad_rational.json", bad);
  return 0;
}
