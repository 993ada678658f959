#include "transvect/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace transvect {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw std::invalid_argument("Partition: parts must be nonnegative and weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) {
    parts_.pop_back();
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) {
    s += p;
  }
  return s;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    out += (i ? "," : "") + std::to_string(parts_[i]);
  }
  return out + ")";
}

WeightVector plethysm_weights(int r, int d) {
  if (r < 0 || d < 0) {
    throw std::invalid_argument("plethysm_weights: r, d must be nonnegative");
  }
  // count[n][s]: multisets of n values from {0..d} summing to s; weight rd - 2s.
  const int smax = r * d;
  std::vector<std::vector<Integer>> count(r + 1, std::vector<Integer>(smax + 1, 0));
  count[0][0] = 1;
  for (int v = 0; v <= d; ++v) {
    for (int n = 1; n <= r; ++n) {
      for (int s = v; s <= smax; ++s) {
        count[n][s] += count[n - 1][s - v];
      }
    }
  }
  WeightVector w;
  for (int s = 0; s <= smax; ++s) {
    if (count[r][s] != 0) {
      w[smax - 2 * s] = count[r][s];
    }
  }
  return w;
}

IrrDecomp decompose(const WeightVector& w) {
  auto at = [&](int k) {
    auto it = w.find(k);
    return it == w.end() ? Integer(0) : it->second;
  };
  for (const auto& [k, m] : w) {
    if (m < 0) {
      throw std::domain_error("decompose: negative weight multiplicity");
    }
    if (at(-k) != m) {
      throw std::domain_error("decompose: weights are not symmetric");
    }
  }
  IrrDecomp out;
  for (const auto& [k, m] : w) {
    if (k < 0) {
      continue;
    }
    Integer mult = m - at(k + 2);
    if (mult < 0) {
      throw std::domain_error("decompose: negative multiplicity for S_" + std::to_string(k));
    }
    if (mult != 0) {
      out[k] = mult;
    }
  }
  return out;
}

WeightVector character_of(const IrrDecomp& irr) {
  WeightVector w;
  for (const auto& [m, mult] : irr) {
    if (m < 0) {
      throw std::invalid_argument("character_of: negative highest weight");
    }
    for (int k = -m; k <= m; k += 2) {
      w[k] += mult;
    }
  }
  std::erase_if(w, [](const auto& kv) { return kv.second == 0; });
  return w;
}

Integer dimension(const IrrDecomp& irr) {
  Integer dim = 0;
  for (const auto& [m, mult] : irr) {
    dim += mult * (m + 1);
  }
  return dim;
}

IrrDecomp ox_char(int r, int e) {
  if (r < 0 || e < 0) {
    throw std::invalid_argument("ox_char: r, e must be nonnegative");
  }
  IrrDecomp out;
  const int re = r * e;
  for (int p = 0; 2 * p <= re; ++p) {
    out[2 * re - 4 * p] += 1;
  }
  return out;
}

IrrDecomp ideal_char(int r, int d) {
  if (d < 0 || d % 2 != 0 || r < 0) {
    throw std::invalid_argument("ideal_char: need r >= 0 and even d >= 0");
  }
  IrrDecomp out = decompose(plethysm_weights(r, d));
  for (const auto& [m, mult] : ox_char(r, d / 2)) {
    Integer left = out[m] - mult;
    if (left < 0) {
      throw std::domain_error("ideal_char: negative multiplicity for S_" + std::to_string(m) +
                              " at r=" + std::to_string(r) + ", d=" + std::to_string(d));
    }
    out[m] = left;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Integer schur_dim(const Partition& lambda, int n) {
  if (n < 1) {
    throw std::invalid_argument("schur_dim: n must be positive");
  }
  const auto& parts = lambda.parts();
  if (parts.size() > static_cast<std::size_t>(n)) {
    return 0;
  }
  Integer num = 1, den = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int j = 0; j < parts[i]; ++j) {
      int arm = parts[i] - j - 1;
      int leg = 0;
      for (std::size_t k = i + 1; k < parts.size() && parts[k] > j; ++k) {
        ++leg;
      }
      num *= n + j - static_cast<int>(i);
      den *= arm + leg + 1;
    }
  }
  return num / den;
}

TernaryDimReport ternary_dim_report() {
  TernaryDimReport rep;
  Integer quartics = schur_dim(Partition{4}, 3);
  rep.plethysm = binomial(quartics.get_si() + 2, 3);
  rep.ox_part = 0;
  for (int p = 0; p <= 3; ++p) {
    rep.ox_part += schur_dim(Partition{12 - 2 * p, 2 * p}, 3);
  }
  rep.ideal_part = 0;
  for (const auto& lambda : {Partition{9, 3}, Partition{6, 0}, Partition{6, 3}, Partition{4, 2},
                             Partition{0, 0}}) {
    rep.ideal_part += schur_dim(lambda, 3);
  }
  return rep;
}

bool ternary_dim_check() { return ternary_dim_report().pass(); }

std::string to_string(const IrrDecomp& irr) {
  std::string out;
  for (auto it = irr.rbegin(); it != irr.rend(); ++it) {
    if (it->second == 0) {
      continue;
    }
    if (!out.empty()) {
      out += ' ';
    }
    if (it->second != 1) {
      out += it->second.get_str();
    }
    out += "S" + std::to_string(it->first);
  }
  return out;
}

} // namespace transvect
