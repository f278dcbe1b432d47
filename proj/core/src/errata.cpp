#include "singquad/errata.hpp"

#include <sstream>

#include "singquad/corrections.hpp"
#include "singquad/errors.hpp"

namespace singquad {

namespace {

RationalPoly poly(std::vector<Rational> coeffs) {
  return RationalPoly(std::move(coeffs));
}

std::string format_jump_poly(const RationalPoly& p, int k) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t m = 0; m <= p.degree(); ++m) {
    const Rational c = p.coeff(m);
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    if (first && c < 0) os << "-";
    first = false;
    os << boost::multiprecision::abs(c);
    if (m > 0) os << "*alpha" << (m > 1 ? "^" + std::to_string(m) : "");
    const int hpow = k + 1 - static_cast<int>(m);
    if (hpow > 0) os << "*h" << (hpow > 1 ? "^" + std::to_string(hpow) : "");
  }
  return os.str();
}

std::string jump_label(int k) {
  switch (k) {
    case 0: return "[f]";
    case 1: return "[f']";
    case 2: return "[f'']";
    case 3: return "[f''']";
    default: return "[f^(" + std::to_string(k) + ")]";
  }
}

}  // namespace

std::vector<RationalPoly> published_correction(int n, int j) {
  using R = Rational;
  if (n == 1 && j == 1) {
    return {poly({R(-1, 2), R(1)}), poly({R(0), R(1, 2), R(-1, 2)})};
  }
  if (n == 2 && j == 1) {
    return {poly({R(-1, 3), R(1)}),
            poly({R(0), R(-1, 3), R(1, 2)}),
            poly({R(0), R(0), R(-1, 6), R(1, 6)})};
  }
  if (n == 2 && j == 2) {
    return {poly({R(1, 3), R(-1)}),
            poly({R(0), R(-1, 3), R(1, 2)}),
            poly({R(0), R(0), R(1, 6), R(-1, 6)})};
  }
  if (n == 3 && j == 1) {
    return {poly({R(-3, 8), R(1)}),
            poly({R(0), R(3, 8), R(-1, 2)}),
            poly({R(0), R(0), R(-3, 16), R(1, 6)}),
            poly({R(0), R(0), R(0), R(1, 16), R(-1, 24)})};
  }
  if (n == 3 && j == 2) {
    return {poly({R(-1, 2), R(1)}),
            poly({R(-1, 8), R(1, 2), R(-1, 2)}),
            poly({R(-1, 48), R(1, 8), R(-1, 4), R(1, 6)}),
            poly({R(1, 48), R(1, 48), R(-1, 16), R(1, 12), R(-1, 24)})};
  }
  if (n == 3 && j == 3) {
    return {poly({R(3, 8), R(-1)}),
            poly({R(0), R(3, 8), R(-1, 2)}),
            poly({R(0), R(0), R(3, 16), R(-1, 6)}),
            poly({R(0), R(0), R(0), R(1, 16), R(-1, 24)})};
  }
  if (n == 4 && j == 1) {
    return {poly({R(-14, 45), R(1)}),
            poly({R(0), R(14, 45), R(-1, 2)}),
            poly({R(0), R(0), R(-7, 45), R(1, 6)}),
            poly({R(0), R(0), R(0), R(7, 135), R(-1, 24)}),
            poly({R(0), R(0), R(0), R(0), R(-7, 540), R(1, 120)})};
  }
  if (n == 4 && j == 2) {
    return {poly({R(-11, 15), R(1)}),
            poly({R(-17, 90), R(11, 15), R(-1, 2)}),
            poly({R(1, 90), R(17, 90), R(-11, 30), R(1, 6)}),
            poly({R(11, 1080), R(-1, 90), R(-17, 180), R(11, 90), R(-1, 24)}),
            poly({R(-1, 216), R(-11, 1080), R(1, 180), R(17, 540), R(-11, 360),
                  R(1, 120)})};
  }
  if (n == 4 && j == 3) {
    return {poly({R(11, 15), R(-1)}),
            poly({R(-17, 90), R(11, 15), R(-1, 2)}),
            poly({R(-1, 90), R(-17, 90), R(11, 30), R(-1, 6)}),
            poly({R(11, 1080), R(-1, 90), R(-17, 180), R(11, 90), R(-1, 24)}),
            poly({R(1, 216), R(11, 1080), R(-1, 180), R(-17, 540), R(11, 360),
                  R(-1, 120)})};
  }
  if (n == 4 && j == 4) {
    return {poly({R(14, 45), R(-1)}),
            poly({R(0), R(14, 45), R(-1, 2)}),
            poly({R(0), R(0), R(7, 45), R(-1, 6)}),
            poly({R(0), R(0), R(0), R(7, 135), R(-1, 24)}),
            poly({R(0), R(0), R(0), R(0), R(7, 540), R(-1, 120)})};
  }
  throw InvalidArgumentError("published_correction: no table entry for (" +
                             std::to_string(n) + ", " + std::to_string(j) + ")");
}

std::vector<ErratumEntry> erratum_entries() {
  std::vector<ErratumEntry> out;
  for (int n = 1; n <= 4; ++n) {
    for (int j = 1; j <= n; ++j) {
      ErratumEntry e;
      e.n = n;
      e.j = j;
      e.published = published_correction(n, j);
      const CorrectionPolynomial& gen = generate_correction(n, j);
      for (int k = 0; k <= n; ++k) {
        e.generated.push_back(gen.jump_term(static_cast<std::size_t>(k)));
        if (!(e.generated.back() == e.published[static_cast<std::size_t>(k)])) {
          e.match = false;
          e.mismatched_jump_orders.push_back(k);
        }
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::string erratum_report() {
  std::ostringstream os;
  os << "Closed-form correction terms: published table vs. constructive "
        "generator\n";
  os << "Convention: corrected integral = classical integral - C; alpha is\n"
        "measured from the left node of the containing interval for the\n"
        "first ceil(n/2) variants and from the right node otherwise.\n\n";
  for (const auto& e : erratum_entries()) {
    os << "C_{" << e.n << "," << e.j << "}: "
       << (e.match ? "MATCH" : "MISMATCH") << "\n";
    for (int k = 0; k <= e.n; ++k) {
      const auto ks = static_cast<std::size_t>(k);
      const bool bad =
          std::find(e.mismatched_jump_orders.begin(),
                    e.mismatched_jump_orders.end(),
                    k) != e.mismatched_jump_orders.end();
      os << "  " << jump_label(k) << " term:\n";
      os << "    published: " << format_jump_poly(e.published[ks], k) << "\n";
      if (bad) {
        os << "    generator: " << format_jump_poly(e.generated[ks], k)
           << "  <-- differs; generator form is shipped\n";
      } else {
        os << "    generator: agrees\n";
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace singquad
