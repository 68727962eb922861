#include "invsg/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "invsg/errors.hpp"

namespace invsg {

  namespace {
    constexpr Element kUnmapped = UINT32_MAX;

    using Fingerprint = std::array<std::size_t, 4>;

    std::vector<Fingerprint> fingerprints(CayleyTable const& t) {
      std::size_t              n = t.size();
      std::vector<Fingerprint> out(n);
      for (Element x = 0; x < n; ++x) {
        // Powers x, x^2, ... until the first repeat gives index and period.
        std::vector<std::size_t> first_seen(n, 0);
        Element                  p = x;
        std::size_t              k = 1;
        while (first_seen[p] == 0) {
          first_seen[p] = k++;
          p             = t(p, x);
        }
        std::size_t index  = first_seen[p];
        std::size_t period = k - first_seen[p];

        std::vector<bool> in_row(n, false), in_col(n, false);
        std::size_t       row_size = 0, col_size = 0;
        for (Element y = 0; y < n; ++y) {
          if (!in_row[t(x, y)]) {
            in_row[t(x, y)] = true;
            ++row_size;
          }
          if (!in_col[t(y, x)]) {
            in_col[t(y, x)] = true;
            ++col_size;
          }
        }
        out[x] = {index, period, row_size, col_size};
      }
      return out;
    }

    class Search {
     public:
      Search(CayleyTable const& s, CayleyTable const& t)
          : _s(s),
            _t(t),
            _gens(greedy_generating_set(s)),
            _fs(fingerprints(s)),
            _ft(fingerprints(t)) {}

      bool quick_reject() const {
        if (_s.size() != _t.size()
            || _s.number_of_idempotents() != _t.number_of_idempotents()
            || _s.find_identity().has_value() != _t.find_identity().has_value()) {
          return true;
        }
        auto a = _fs, b = _ft;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a != b;
      }

      std::optional<std::vector<Element>> run() {
        if (quick_reject()) {
          return std::nullopt;
        }
        std::vector<Element> images;
        if (assign(images)) {
          return _map;
        }
        return std::nullopt;
      }

     private:
      // Rebuilds the map on <gens[0..images.size())> from scratch. Returns
      // false on a conflict.
      bool propagate(std::vector<Element> const& images) {
        std::size_t n = _s.size();
        _map.assign(n, kUnmapped);
        _used.assign(n, false);
        std::vector<Element> order;
        auto set = [&](Element x, Element y) {
          if (_map[x] != kUnmapped) {
            return _map[x] == y;
          }
          if (_used[y] || _fs[x] != _ft[y] || _s.is_idempotent(x) != _t.is_idempotent(y)) {
            return false;
          }
          _map[x]  = y;
          _used[y] = true;
          order.push_back(x);
          return true;
        };
        for (std::size_t i = 0; i < images.size(); ++i) {
          if (!set(_gens[i], images[i])) {
            return false;
          }
        }
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
          Element x = order[pos];
          for (std::size_t i = 0; i < images.size(); ++i) {
            if (!set(_s(x, _gens[i]), _t(_map[x], images[i]))) {
              return false;
            }
          }
        }
        return true;
      }

      bool is_homomorphism() const {
        std::size_t n = _s.size();
        for (Element a = 0; a < n; ++a) {
          for (Element b = 0; b < n; ++b) {
            if (_map[_s(a, b)] != _t(_map[a], _map[b])) {
              return false;
            }
          }
        }
        return true;
      }

      bool assign(std::vector<Element>& images) {
        if (images.size() == _gens.size()) {
          return propagate(images) && is_homomorphism();
        }
        Element g = _gens[images.size()];
        for (Element y = 0; y < _t.size(); ++y) {
          if (_fs[g] != _ft[y]) {
            continue;
          }
          images.push_back(y);
          if (propagate(images) && assign(images)) {
            return true;
          }
          images.pop_back();
        }
        return false;
      }

      CayleyTable const&       _s;
      CayleyTable const&       _t;
      std::vector<Element>     _gens;
      std::vector<Fingerprint> _fs;
      std::vector<Fingerprint> _ft;
      std::vector<Element>     _map;
      std::vector<bool>        _used;
    };
  }  // namespace

  std::optional<std::vector<Element>>
  find_isomorphism(CayleyTable const& s, CayleyTable const& t, std::size_t cap) {
    if (s.size() > cap || t.size() > cap) {
      throw ResourceLimit("isomorphism search is capped at " + std::to_string(cap)
                          + " elements");
    }
    return Search(s, t).run();
  }

  bool are_isomorphic(CayleyTable const& s, CayleyTable const& t, std::size_t cap) {
    return find_isomorphism(s, t, cap).has_value();
  }

  bool are_isomorphic(FiniteInverseSemigroup const& s,
                      FiniteInverseSemigroup const& t,
                      std::size_t                   cap) {
    return are_isomorphic(s.table(), t.table(), cap);
  }

}  // namespace invsg
