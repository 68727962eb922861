#include "document.hpp"

#include <algorithm>

#include <json.hpp>

namespace invsg::cli {

  namespace {
    using nlohmann::json;
    using Json = nlohmann::ordered_json;
    using Keys = std::vector<std::string_view>;

    std::string child(std::string const& path, std::string_view key) {
      return path + "/" + std::string(key);
    }

    std::string child(std::string const& path, std::size_t index) {
      return path + "/" + std::to_string(index);
    }

    std::string where(std::string const& path) {
      return path.empty() ? "/" : path;
    }

    void expect_keys(json const& j, std::string const& path, Keys const& required, Keys const& optional) {
      if (!j.is_object()) {
        throw ParseError(where(path), "expected an object");
      }
      for (auto key : required) {
        if (!j.contains(std::string(key))) {
          throw ParseError(child(path, key), "missing required field");
        }
      }
      for (auto const& [key, value] : j.items()) {
        bool known = std::find(required.begin(), required.end(), key) != required.end()
                     || std::find(optional.begin(), optional.end(), key) != optional.end();
        if (!known) {
          throw ParseError(child(path, key), "unknown field");
        }
      }
    }

    std::uint64_t to_uint(json const& j, std::string const& path) {
      if (!j.is_number_unsigned()) {
        throw ParseError(path, "expected a non-negative integer");
      }
      return j.get<std::uint64_t>();
    }

    std::uint64_t to_index(json const& j, std::string const& path, std::uint64_t bound) {
      auto v = to_uint(j, path);
      if (v >= bound) {
        throw ParseError(path, "index " + std::to_string(v) + " out of range (must be < "
                                   + std::to_string(bound) + ")");
      }
      return v;
    }

    json const& to_array(json const& j, std::string const& path) {
      if (!j.is_array()) {
        throw ParseError(path, "expected an array");
      }
      return j;
    }

    std::string kind_of(json const& j, std::string const& path) {
      if (!j.is_object() || !j.contains("kind")) {
        throw ParseError(child(path, "kind"), "missing required field");
      }
      if (!j["kind"].is_string()) {
        throw ParseError(child(path, "kind"), "expected a string");
      }
      return j["kind"].get<std::string>();
    }

    GeneratorsPayload parse_generators(json const& j, std::string const& path, Keys const& extra) {
      expect_keys(j, path, {"kind", "degree", "generators"}, extra);
      GeneratorsPayload out;
      out.degree = to_uint(j["degree"], child(path, "degree"));
      if (out.degree == 0) {
        throw ParseError(child(path, "degree"), "degree must be at least 1");
      }
      auto gens_path   = child(path, "generators");
      auto const& gens = to_array(j["generators"], gens_path);
      if (gens.empty()) {
        throw ParseError(gens_path, "at least one generator is required");
      }
      for (std::size_t i = 0; i < gens.size(); ++i) {
        auto        gpath = child(gens_path, i);
        auto const& g     = to_array(gens[i], gpath);
        if (g.size() != out.degree) {
          throw ParseError(gpath, "expected " + std::to_string(out.degree) + " images, got "
                                      + std::to_string(g.size()));
        }
        std::vector<PartialBijection::Point> images;
        for (std::size_t x = 0; x < g.size(); ++x) {
          images.push_back(g[x].is_null() ? PartialBijection::undefined
                                          : static_cast<PartialBijection::Point>(
                                              to_index(g[x], child(gpath, x), out.degree)));
        }
        try {
          out.generators.emplace_back(std::move(images));
        } catch (RejectedInput const& e) {
          throw ParseError(gpath, e.what());
        }
      }
      return out;
    }

    TablePayload parse_table(json const& j, std::string const& path, Keys extra) {
      extra.push_back("generators");
      expect_keys(j, path, {"kind", "size", "table"}, extra);
      TablePayload out;
      auto         size = to_uint(j["size"], child(path, "size"));
      if (size == 0) {
        throw ParseError(child(path, "size"), "size must be at least 1");
      }
      auto        table_path = child(path, "table");
      auto const& rows       = to_array(j["table"], table_path);
      if (rows.size() != size) {
        throw ParseError(table_path, "expected " + std::to_string(size) + " rows, got "
                                         + std::to_string(rows.size()));
      }
      for (std::size_t a = 0; a < size; ++a) {
        auto        rpath = child(table_path, a);
        auto const& row   = to_array(rows[a], rpath);
        if (row.size() != size) {
          throw ParseError(rpath, "expected " + std::to_string(size) + " entries, got "
                                      + std::to_string(row.size()));
        }
        std::vector<Element> entries;
        for (std::size_t b = 0; b < size; ++b) {
          entries.push_back(static_cast<Element>(to_index(row[b], child(rpath, b), size)));
        }
        out.table.push_back(std::move(entries));
      }
      if (j.contains("generators")) {
        auto        gpath = child(path, "generators");
        auto const& gens  = to_array(j["generators"], gpath);
        for (std::size_t i = 0; i < gens.size(); ++i) {
          out.generators.push_back(static_cast<Element>(to_index(gens[i], child(gpath, i), size)));
        }
      }
      return out;
    }

    SemigroupPayload parse_semigroup(json const& j, std::string const& path, Keys const& extra) {
      auto kind = kind_of(j, path);
      if (kind == "partial-bijection-generators") {
        return parse_generators(j, path, extra);
      }
      if (kind == "multiplication-table") {
        return parse_table(j, path, extra);
      }
      throw ParseError(child(path, "kind"),
                       "expected \"partial-bijection-generators\" or \"multiplication-table\", got \""
                           + kind + "\"");
    }

    std::vector<std::vector<Element>> parse_matrix(json const& j, std::string const& path) {
      std::vector<std::vector<Element>> out;
      for (std::size_t i = 0; i < to_array(j, path).size(); ++i) {
        auto rpath = child(path, i);
        std::vector<Element> row;
        for (std::size_t k = 0; k < to_array(j[i], rpath).size(); ++k) {
          row.push_back(static_cast<Element>(to_index(j[i][k], child(rpath, k), UINT32_MAX)));
        }
        out.push_back(std::move(row));
      }
      return out;
    }

    ActionPayload parse_action(json const& j, Keys extra) {
      extra.push_back("generators");
      expect_keys(j, "", {"kind", "actor", "target", "act"}, extra);
      auto          actor  = parse_semigroup(j["actor"], "/actor", {});
      auto          target = parse_semigroup(j["target"], "/target", {});
      ActionPayload out{std::move(actor), std::move(target), parse_matrix(j["act"], "/act"), {}};
      if (j.contains("generators")) {
        auto pairs = parse_matrix(j["generators"], "/generators");
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          if (pairs[i].size() != 2) {
            throw ParseError(child("/generators", i), "expected a pair [alpha, g]");
          }
          out.generators.push_back({pairs[i][0], pairs[i][1]});
        }
      }
      return out;
    }

    DocumentFlags parse_flags(json const& j) {
      DocumentFlags flags;
      if (j.contains("monoid")) {
        if (!j["monoid"].is_boolean()) {
          throw ParseError("/monoid", "expected a boolean");
        }
        flags.monoid = j["monoid"].get<bool>();
      }
      if (j.contains("max_closure")) {
        flags.max_closure = to_uint(j["max_closure"], "/max_closure");
      }
      if (j.contains("seed")) {
        flags.seed = to_uint(j["seed"], "/seed");
      }
      return flags;
    }

    Json print_semigroup(SemigroupPayload const& payload) {
      if (auto const* g = std::get_if<GeneratorsPayload>(&payload)) {
        Json gens = Json::array();
        for (auto const& p : g->generators) {
          Json images = Json::array();
          for (auto y : p.images()) {
            images.push_back(y == PartialBijection::undefined ? Json(nullptr) : Json(y));
          }
          gens.push_back(std::move(images));
        }
        return {{"kind", "partial-bijection-generators"},
                {"degree", g->degree},
                {"generators", std::move(gens)}};
      }
      auto const& t   = std::get<TablePayload>(payload);
      Json        out = {{"kind", "multiplication-table"}, {"size", t.table.size()}, {"table", t.table}};
      if (!t.generators.empty()) {
        out["generators"] = t.generators;
      }
      return out;
    }
  }  // namespace

  InputDocument parse_input(std::string_view text) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::parse_error const& e) {
      throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
    }
    Keys const    flag_keys = {"monoid", "max_closure", "seed"};
    InputDocument doc;
    if (kind_of(j, "") == "action") {
      doc.payload = parse_action(j, flag_keys);
    } else if (auto payload = parse_semigroup(j, "", flag_keys);
               auto* g = std::get_if<GeneratorsPayload>(&payload)) {
      doc.payload = std::move(*g);
    } else {
      doc.payload = std::get<TablePayload>(std::move(payload));
    }
    doc.flags = parse_flags(j);
    return doc;
  }

  std::string print_document(InputDocument const& doc) {
    Json out;
    if (auto const* g = std::get_if<GeneratorsPayload>(&doc.payload)) {
      out = print_semigroup(*g);
    } else if (auto const* t = std::get_if<TablePayload>(&doc.payload)) {
      out = print_semigroup(*t);
    } else {
      auto const& a = std::get<ActionPayload>(doc.payload);
      out = {{"kind", "action"},
             {"actor", print_semigroup(a.actor)},
             {"target", print_semigroup(a.target)},
             {"act", a.act}};
      if (!a.generators.empty()) {
        Json pairs = Json::array();
        for (auto const& p : a.generators) {
          pairs.push_back({p.alpha, p.g});
        }
        out["generators"] = std::move(pairs);
      }
    }
    if (doc.flags.monoid) {
      out["monoid"] = *doc.flags.monoid;
    }
    if (doc.flags.max_closure) {
      out["max_closure"] = *doc.flags.max_closure;
    }
    if (doc.flags.seed) {
      out["seed"] = *doc.flags.seed;
    }
    return out.dump();
  }

  FiniteInverseSemigroup build_semigroup(SemigroupPayload const& payload, ClosureOptions const& options) {
    if (auto const* g = std::get_if<GeneratorsPayload>(&payload)) {
      return generate_closure(g->generators, options);
    }
    auto const& t = std::get<TablePayload>(payload);
    if (t.table.size() > options.max_elements) {
      throw ResourceLimit("table of " + std::to_string(t.table.size())
                          + " elements exceeds the closure cap");
    }
    return FiniteInverseSemigroup::from_table(CayleyTable::from_rows(t.table), t.generators);
  }

  EndomorphismAction build_action(ActionPayload const& payload, ClosureOptions const& options) {
    return EndomorphismAction(build_semigroup(payload.actor, options),
                              build_semigroup(payload.target, options), payload.act);
  }

}  // namespace invsg::cli
