#include "invsg/partial_bijection.hpp"

#include <algorithm>
#include <string>

#include "invsg/errors.hpp"

namespace invsg {

  PartialBijection::PartialBijection(std::vector<Point> images)
      : _images(std::move(images)) {
    if (_images.empty()) {
      throw RejectedInput("partial bijection must have degree at least 1");
    }
    std::vector<std::size_t> preimage(_images.size(), _images.size());
    for (std::size_t x = 0; x < _images.size(); ++x) {
      Point y = _images[x];
      if (y == undefined) {
        continue;
      }
      if (y >= _images.size()) {
        throw RejectedInput("partial bijection image " + std::to_string(y)
                            + " out of range for degree "
                            + std::to_string(_images.size()));
      }
      if (preimage[y] != _images.size()) {
        throw RejectedInput("partial bijection is not injective: points "
                            + std::to_string(preimage[y]) + " and "
                            + std::to_string(x) + " both map to "
                            + std::to_string(y));
      }
      preimage[y] = x;
    }
  }

  PartialBijection PartialBijection::identity(std::size_t degree) {
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      images[i] = static_cast<Point>(i);
    }
    return PartialBijection(std::move(images));
  }

  PartialBijection PartialBijection::empty(std::size_t degree) {
    return PartialBijection(std::vector<Point>(degree, undefined));
  }

  PartialBijection PartialBijection::idempotent(std::size_t            degree,
                                                std::span<Point const> domain) {
    std::vector<Point> images(degree, undefined);
    for (Point x : domain) {
      if (x >= degree) {
        throw RejectedInput("partial identity point out of range");
      }
      images[x] = x;
    }
    return PartialBijection(std::move(images));
  }

  std::optional<PartialBijection::Point>
  PartialBijection::operator()(Point x) const {
    if (x >= _images.size() || _images[x] == undefined) {
      return std::nullopt;
    }
    return _images[x];
  }

  std::size_t PartialBijection::rank() const noexcept {
    return static_cast<std::size_t>(std::count_if(
        _images.begin(), _images.end(), [](Point y) { return y != undefined; }));
  }

  bool PartialBijection::is_identity() const noexcept {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i) {
        return false;
      }
    }
    return true;
  }

  std::string PartialBijection::to_string() const {
    std::string out = "{";
    bool        first = true;
    for (std::size_t x = 0; x < _images.size(); ++x) {
      if (_images[x] == undefined) {
        continue;
      }
      if (!first) {
        out += ',';
      }
      first = false;
      out += std::to_string(x) + "->" + std::to_string(_images[x]);
    }
    return out + "}";
  }

  PartialBijection compose(PartialBijection const& p,
                           PartialBijection const& q) {
    if (p.degree() != q.degree()) {
      throw RejectedInput("cannot compose partial bijections of degrees "
                          + std::to_string(p.degree()) + " and "
                          + std::to_string(q.degree()));
    }
    auto const&                          pi = p.images();
    auto const&                          qi = q.images();
    std::vector<PartialBijection::Point> images(pi.size(),
                                                PartialBijection::undefined);
    for (std::size_t x = 0; x < pi.size(); ++x) {
      if (pi[x] != PartialBijection::undefined) {
        images[x] = qi[pi[x]];
      }
    }
    return PartialBijection(std::move(images));
  }

  PartialBijection invert(PartialBijection const& p) {
    auto const&                          pi = p.images();
    std::vector<PartialBijection::Point> images(pi.size(),
                                                PartialBijection::undefined);
    for (std::size_t x = 0; x < pi.size(); ++x) {
      if (pi[x] != PartialBijection::undefined) {
        images[pi[x]] = static_cast<PartialBijection::Point>(x);
      }
    }
    return PartialBijection(std::move(images));
  }

  namespace {
    void extend(std::size_t                           degree,
                std::vector<PartialBijection::Point>& prefix,
                std::vector<bool>&                    used,
                std::vector<PartialBijection>&        out) {
      if (prefix.size() == degree) {
        out.emplace_back(prefix);
        return;
      }
      prefix.push_back(PartialBijection::undefined);
      extend(degree, prefix, used, out);
      prefix.pop_back();
      for (std::size_t y = 0; y < degree; ++y) {
        if (used[y]) {
          continue;
        }
        used[y] = true;
        prefix.push_back(static_cast<PartialBijection::Point>(y));
        extend(degree, prefix, used, out);
        prefix.pop_back();
        used[y] = false;
      }
    }
  }  // namespace

  std::vector<PartialBijection> all_partial_bijections(std::size_t degree) {
    if (degree == 0) {
      throw RejectedInput("degree must be at least 1");
    }
    std::vector<PartialBijection>        out;
    std::vector<PartialBijection::Point> prefix;
    std::vector<bool>                    used(degree, false);
    extend(degree, prefix, used, out);
    return out;
  }

}  // namespace invsg

std::size_t std::hash<invsg::PartialBijection>::operator()(
    invsg::PartialBijection const& p) const noexcept {
  std::size_t h = p.degree();
  for (auto y : p.images()) {
    h = h * 0x100000001b3ULL ^ (y + 0x9e3779b9U);
  }
  return h;
}
