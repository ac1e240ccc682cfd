#include "bmparity/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace bmparity {
namespace {

struct Signature {
  Integer to_basepoint;
  IntVector sorted_row;
  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(const BasedMatrix& t, std::size_t g) {
  IntVector row = t.row(g);
  std::sort(row.begin(), row.end());
  return {t.at(g, 0), std::move(row)};
}

// Enumerates isomorphisms t1 -> t2; `visit` returns false to stop.
void search(const BasedMatrix& t1, const BasedMatrix& t2,
            const std::function<bool(const Isomorphism&)>& visit) {
  const std::size_t n = t1.size();
  if (n != t2.size() || t1.ring() != t2.ring()) return;

  std::vector<Signature> sig1, sig2;
  for (std::size_t g = 0; g < n; ++g) {
    sig1.push_back(signature(t1, g));
    sig2.push_back(signature(t2, g));
  }
  std::vector<std::vector<std::size_t>> candidates(n);
  candidates[0] = {0};
  for (std::size_t g = 1; g < n; ++g) {
    for (std::size_t h = 1; h < n; ++h) {
      if (sig1[g] == sig2[h]) candidates[g].push_back(h);
    }
    if (candidates[g].empty()) return;
  }
  // Most constrained elements first.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin() + 1, order.end(), [&](std::size_t a, std::size_t b) {
    return candidates[a].size() < candidates[b].size();
  });

  Isomorphism phi{std::vector<std::size_t>(n, n)};
  std::vector<char> used(n, 0);
  phi.image[0] = 0;
  used[0] = 1;
  bool stop = false;
  std::function<void(std::size_t)> place = [&](std::size_t depth) {
    if (stop) return;
    if (depth == n) {
      if (!visit(phi)) stop = true;
      return;
    }
    const std::size_t g = order[depth];
    for (std::size_t h : candidates[g]) {
      if (used[h]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t k = order[d];
        ok = t1.at(g, k) == t2.at(h, phi.image[k]);
      }
      if (!ok) continue;
      phi.image[g] = h;
      used[h] = 1;
      place(depth + 1);
      used[h] = 0;
      phi.image[g] = n;
      if (stop) return;
    }
  };
  place(1);
}

}  // namespace

bool Isomorphism::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] != i) return false;
  }
  return true;
}

std::map<std::string, std::string> Isomorphism::by_label(const BasedMatrix& source,
                                                         const BasedMatrix& target) const {
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < image.size(); ++i) out[source.label(i)] = target.label(image[i]);
  return out;
}

Isomorphism compose(const Isomorphism& second, const Isomorphism& first) {
  Isomorphism out{std::vector<std::size_t>(first.image.size())};
  for (std::size_t i = 0; i < first.image.size(); ++i) out.image[i] = second.image[first.image[i]];
  return out;
}

Isomorphism inverse(const Isomorphism& phi) {
  Isomorphism out{std::vector<std::size_t>(phi.image.size())};
  for (std::size_t i = 0; i < phi.image.size(); ++i) out.image[phi.image[i]] = i;
  return out;
}

bool preserves_pairing(const BasedMatrix& source, const BasedMatrix& target,
                       const Isomorphism& phi) {
  const std::size_t n = source.size();
  if (target.size() != n || phi.image.size() != n || phi.image[0] != 0) return false;
  std::vector<char> hit(n, 0);
  for (auto i : phi.image) {
    if (i >= n || hit[i]) return false;
    hit[i] = 1;
  }
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (source.at(g, h) != target.at(phi.image[g], phi.image[h])) return false;
    }
  }
  return true;
}

std::optional<Isomorphism> is_isomorphic(const BasedMatrix& t1, const BasedMatrix& t2) {
  std::optional<Isomorphism> found;
  search(t1, t2, [&](const Isomorphism& phi) {
    found = phi;
    return false;
  });
  return found;
}

std::vector<Isomorphism> automorphisms(const BasedMatrix& t) {
  std::vector<Isomorphism> out;
  search(t, t, [&](const Isomorphism& phi) {
    out.push_back(phi);
    return true;
  });
  auto id = std::find_if(out.begin(), out.end(), [](const Isomorphism& p) { return p.is_identity(); });
  if (id != out.end()) std::iter_swap(out.begin(), id);
  return out;
}

std::string cycle_notation(const BasedMatrix& t, const Isomorphism& phi) {
  std::string out;
  std::vector<char> seen(phi.image.size(), 0);
  for (std::size_t i = 0; i < phi.image.size(); ++i) {
    if (seen[i] || phi.image[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = phi.image[j]) {
      if (j != i) out += " ";
      out += t.label(j);
      seen[j] = 1;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace bmparity
