#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace invsg {

  // An injective partial map on {0, ..., degree - 1}.
  //
  // Composition is left-to-right: compose(p, q) applies p first, so that
  // evaluating a word over generators is a left fold in reading order.
  class PartialBijection {
   public:
    using Point = std::uint32_t;
    static constexpr Point undefined = UINT32_MAX;

    // Throws RejectedInput if degree is 0, a point is out of range, or two
    // points share an image.
    explicit PartialBijection(std::vector<Point> images);

    static PartialBijection identity(std::size_t degree);
    static PartialBijection empty(std::size_t degree);
    // Partial identity on the given points.
    static PartialBijection idempotent(std::size_t degree,
                                       std::span<Point const> domain);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    std::optional<Point> operator()(Point x) const;

    std::span<Point const> images() const noexcept {
      return _images;
    }

    std::size_t rank() const noexcept;
    bool        is_identity() const noexcept;

    // e.g. "{0->1,2->2}"; the empty map prints as "{}".
    std::string to_string() const;

    friend bool operator==(PartialBijection const&, PartialBijection const&)
        = default;
    friend auto operator<=>(PartialBijection const&, PartialBijection const&)
        = default;

   private:
    std::vector<Point> _images;
  };

  // Throws RejectedInput on degree mismatch.
  PartialBijection compose(PartialBijection const& p,
                           PartialBijection const& q);

  PartialBijection invert(PartialBijection const& p);

  // Every partial bijection of the given degree, ordered lexicographically by
  // image sequence with "undefined" sorting before every point.
  std::vector<PartialBijection> all_partial_bijections(std::size_t degree);

}  // namespace invsg

template <>
struct std::hash<invsg::PartialBijection> {
  std::size_t operator()(invsg::PartialBijection const& p) const noexcept;
};
