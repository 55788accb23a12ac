// Decides Phi_N | P from coefficient sums and compares with long division.
// usage: sample_divisibility N c0,c1,...   (ascending coefficients)

#include <iostream>
#include <sstream>
#include <string>

#include "cyclokit/cyclotomic.hpp"
#include "cyclokit/divisibility.hpp"

int main(int argc, char** argv) {
  using namespace cyclokit;
  std::int64_t N = 12;
  IntPoly P = phi_mobius(12).poly * IntPoly{3, 0, -1, 2};
  if (argc == 3) {
    N = std::stoll(argv[1]);
    std::vector<BigInt> c;
    std::stringstream ss(argv[2]);
    for (std::string tok; std::getline(ss, tok, ',');) c.emplace_back(tok);
    P = IntPoly(std::move(c));
  }
  try {
    const auto rep = divides_cyclotomic(P, N);
    std::cout << "Phi_" << N << " | P by coefficient sums: " << (rep.verdict ? "yes" : "no") << " ("
              << rep.witnesses.size() << " sums, " << rep.op_count << " additions)\n";
    for (const auto& w : rep.witnesses) std::cout << "  h=" << w.h << "  sum=" << w.sum << "\n";
    const auto div = divmod(P, phi_mobius(N).poly);
    std::cout << "by long division: " << (div.remainder.is_zero() ? "yes" : "no") << " (" << div.op_count
              << " multiply-adds)\n";
  } catch (const PreconditionError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
