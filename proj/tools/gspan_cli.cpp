// Command-line front end. Talks to the engine only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "gspan/gspan.h"

using Json = nlohmann::json;

namespace
{

constexpr int kExitPass = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

/// Owns a string handed out by the C API.
struct CString
{
  char *p = nullptr;
  ~CString() { gspan_string_free(p); }
  std::string str() const { return p ? p : ""; }
  Json json() const { return Json::parse(str()); }
};

struct GroupHandle
{
  gspan_group *p = nullptr;
  ~GroupHandle() { gspan_group_free(p); }
};

struct Failure
{
  int code;
};

/// Reports an error status and aborts the command; verification failures are
/// handled by the caller.
void check(gspan_status s)
{
  if (s == GSPAN_OK || s == GSPAN_VERIFY_FAILED)
    return;
  std::cerr << "error (" << gspan_status_name(s) << "): " << gspan_last_error() << "\n";
  throw Failure{s == GSPAN_ERR_INTERNAL ? 3 : kExitUsage};
}

void open_group(std::string const &spec, GroupHandle &g)
{
  if (spec.empty()) {
    std::cerr << "error: --group is required (e.g. --group \"cyclic 3\")\n";
    throw Failure{kExitUsage};
  }
  check(gspan_group_create(spec.c_str(), &g.p));
}

void write_out(std::string const &path, std::string const &text)
{
  if (path.empty())
    return;
  std::ofstream f(path);
  if (!(f << text << "\n")) {
    std::cerr << "error: cannot write " << path << "\n";
    throw Failure{kExitUsage};
  }
}

std::string pad(std::string s, std::size_t width)
{
  if (s.size() < width)
    s.insert(0, width - s.size(), ' ');
  return s;
}

void print_matrix(Json const &labels, Json const &rows, std::string const &row_prefix)
{
  std::size_t w = 4;
  for (auto const &row : rows)
    for (auto const &v : row)
      w = std::max(w, v.dump().size() + 1);
  std::cout << pad("", 8);
  for (std::size_t c = 0; c < labels.size(); ++c)
    std::cout << pad("H" + std::to_string(c + 1), w);
  std::cout << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::cout << pad(row_prefix + std::to_string(r + 1), 8);
    for (auto const &v : rows[r])
      std::cout << pad(v.dump(), w);
    std::cout << "\n";
  }
}

std::string combination(Json const &coeffs)
{
  std::string out;
  for (std::size_t c = 0; c < coeffs.size(); ++c) {
    auto k = coeffs[c].get<long long>();
    if (k == 0)
      continue;
    if (!out.empty())
      out += k < 0 ? " - " : " + ";
    else if (k < 0)
      out += "-";
    auto mag = k < 0 ? -k : k;
    if (mag != 1)
      out += std::to_string(mag) + "·";
    out += "[G/H" + std::to_string(c + 1) + "]";
  }
  return out.empty() ? "0" : out;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Equivariant spans, Burnside categories and their operadic models"};
  app.require_subcommand(1);

  std::string group_spec;
  std::string out_path;
  bool as_json = false;
  auto defaults = gspan_verify_defaults();
  gspan_verify_options opts = defaults;

  auto add_group = [&](CLI::App *cmd) {
    cmd->add_option("--group", group_spec,
                    "preset (trivial, klein, cyclic N, dihedral N, symmetric N), group JSON or file");
  };
  auto add_out = [&](CLI::App *cmd, std::string const &what) {
    cmd->add_option("--out", out_path, "write the " + what + " document to this file");
    cmd->add_flag("--json", as_json, "print JSON instead of text");
  };

  // group
  auto *cmd_group = app.add_subcommand("group", "order and subgroup classes of a group");
  cmd_group->add_option("spec", group_spec, "group spec (alternative to --group)");
  add_group(cmd_group);
  add_out(cmd_group, "group");

  // gset
  std::string doc_a, doc_b;
  auto *cmd_gset = app.add_subcommand("gset", "validate a G-set document and list its orbits");
  cmd_gset->add_option("document", doc_a, "G-set JSON or file")->required();
  add_group(cmd_gset);
  add_out(cmd_gset, "normalized G-set");

  auto *cmd_marks = app.add_subcommand("marks", "table of marks");
  add_group(cmd_marks);
  cmd_marks->add_flag("--json", as_json, "print JSON instead of text");

  auto *cmd_ring = app.add_subcommand("ring", "Burnside ring via span composition, checked against marks");
  add_group(cmd_ring);
  cmd_ring->add_flag("--json", as_json, "print JSON instead of text");

  auto *cmd_compose = app.add_subcommand("compose", "compose two spans: OUTER after INNER");
  cmd_compose->add_option("outer", doc_a, "span JSON or file, applied second")->required();
  cmd_compose->add_option("inner", doc_b, "span JSON or file, applied first")->required();
  add_group(cmd_compose);
  add_out(cmd_compose, "composite span");

  auto *cmd_dual = app.add_subcommand("dual", "dual of a G-map in the Burnside category");
  cmd_dual->add_option("gmap", doc_a, "G-map JSON or file")->required();
  add_group(cmd_dual);
  add_out(cmd_dual, "Burnside element");

  std::size_t sub = 0, super = 0;
  auto *cmd_transfer = app.add_subcommand("transfer", "dual of the projection G/H -> G/K");
  cmd_transfer->add_option("--sub", sub, "subgroup class of H (1-based)")->required();
  cmd_transfer->add_option("--super", super, "subgroup class of K (1-based)")->required();
  add_group(cmd_transfer);
  add_out(cmd_transfer, "Burnside element");

  auto *cmd_presheaf = app.add_subcommand("presheaf", "ranks of Ab(G/H, B) over subgroup classes H");
  cmd_presheaf->add_option("gset", doc_a, "target G-set B (default: the point)");
  add_group(cmd_presheaf);
  cmd_presheaf->add_flag("--json", as_json, "print JSON instead of text");

  std::string suite;
  auto *cmd_verify = app.add_subcommand("verify", "run a property suite");
  cmd_verify->add_option("suite", suite, "bicategory, duality, operad, fixed or atiyah")->required();
  add_group(cmd_verify);
  auto add_numeric = [&](CLI::App *cmd) {
    cmd->add_option("--seed", opts.seed, "random seed")->capture_default_str();
    cmd->add_option("--samples", opts.samples, "numeric samples per check")->capture_default_str();
    cmd->add_option("--tolerance", opts.tolerance, "numeric tolerance")->capture_default_str();
  };
  add_numeric(cmd_verify);
  cmd_verify->add_option("--size-bound", opts.size_bound, "largest G-set / level built")
    ->capture_default_str();
  cmd_verify->add_option("--trials", opts.trials, "random instances per identity (0: suite default)")
    ->capture_default_str();
  add_out(cmd_verify, "JSON report");

  auto *cmd_atiyah = app.add_subcommand("atiyah-sample", "pointwise unit-diagram and homotopy checks");
  cmd_atiyah->add_option("a", doc_a, "G-set A, JSON or file")->required();
  cmd_atiyah->add_option("b", doc_b, "G-set B (default: A)");
  add_group(cmd_atiyah);
  add_numeric(cmd_atiyah);
  add_out(cmd_atiyah, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    GroupHandle g;
    CString out;

    if (*cmd_group) {
      open_group(group_spec, g);
      check(gspan_group_summary(g.p, &out.p));
      auto j = out.json();
      write_out(out_path, j["document"].dump());
      if (as_json) {
        std::cout << j.dump(2) << "\n";
        return kExitPass;
      }
      std::cout << "order " << j["order"] << "\n";
      std::cout << "subgroup classes " << j["class_count"] << "\n";
      for (auto const &c : j["classes"]) {
        std::cout << "  H" << c["index"] << ": order " << c["order"] << ", " << c["conjugates"]
                  << " conjugate(s), normalizer order " << c["normalizer_order"] << "\n";
      }
      return kExitPass;
    }

    if (*cmd_gset) {
      if (!group_spec.empty())
        open_group(group_spec, g);
      check(gspan_gset_describe(g.p, doc_a.c_str(), &out.p));
      auto j = out.json();
      write_out(out_path, j["document"].dump());
      if (as_json) {
        std::cout << j.dump(2) << "\n";
        return kExitPass;
      }
      std::cout << "points " << j["size"] << ", orbits " << j["orbits"].size() << "\n";
      for (auto const &o : j["orbits"])
        std::cout << "  " << o["points"].dump() << " stabilizer H" << o["stabilizer_class"] << "\n";
      return kExitPass;
    }

    if (*cmd_marks) {
      open_group(group_spec, g);
      check(gspan_marks(g.p, &out.p));
      auto j = out.json();
      if (as_json) {
        std::cout << j.dump() << "\n";
        return kExitPass;
      }
      std::cout << "rows: orbit types G/Hi; columns: subgroup classes Hj\n";
      print_matrix(j["labels"], j["marks"], "G/H");
      return kExitPass;
    }

    if (*cmd_ring) {
      open_group(group_spec, g);
      auto s = gspan_ring(g.p, &out.p);
      check(s);
      auto j = out.json();
      if (as_json) {
        std::cout << j.dump() << "\n";
      } else {
        auto const &prod = j["products"];
        for (std::size_t i = 0; i < prod.size(); ++i) {
          for (std::size_t k = i; k < prod.size(); ++k) {
            std::cout << "[G/H" << i + 1 << "]·[G/H" << k + 1 << "] = " << combination(prod[i][k])
                      << "\n";
          }
        }
        std::cout << "marks check: " << (j["marks_consistent"].get<bool>() ? "pass" : "FAIL") << "\n";
      }
      return s == GSPAN_OK ? kExitPass : kExitFailed;
    }

    if (*cmd_compose || *cmd_dual || *cmd_transfer) {
      if (*cmd_transfer)
        open_group(group_spec, g);
      else if (!group_spec.empty())
        open_group(group_spec, g);
      if (*cmd_compose)
        check(gspan_compose(g.p, doc_a.c_str(), doc_b.c_str(), &out.p));
      else if (*cmd_dual)
        check(gspan_dual(g.p, doc_a.c_str(), &out.p));
      else
        check(gspan_transfer(g.p, sub, super, &out.p));
      auto j = out.json();
      auto const &doc = *cmd_compose ? j["span"] : j["class"];
      write_out(out_path, doc.dump());
      if (as_json) {
        std::cout << j.dump() << "\n";
        return kExitPass;
      }
      if (*cmd_compose) {
        std::cout << "apex " << j["span"]["apex"]["n"] << " points\n";
        std::cout << "leg " << j["span"]["leg"].dump() << "\n";
      }
      std::cout << "class " << j["description"].get<std::string>() << "\n";
      return kExitPass;
    }

    if (*cmd_presheaf) {
      open_group(group_spec, g);
      check(gspan_presheaf(g.p, doc_a.empty() ? nullptr : doc_a.c_str(), &out.p));
      auto j = out.json();
      if (as_json) {
        std::cout << j.dump() << "\n";
        return kExitPass;
      }
      for (std::size_t i = 0; i < j["ranks"].size(); ++i)
        std::cout << "rank Ab(G/H" << i + 1 << ", B) = " << j["ranks"][i] << "\n";
      return kExitPass;
    }

    if (*cmd_verify || *cmd_atiyah) {
      open_group(group_spec, g);
      CString json;
      gspan_status s;
      if (*cmd_verify) {
        s = gspan_verify(g.p, suite.c_str(), &opts, &out.p, &json.p);
      } else {
        s = gspan_atiyah_sample(g.p, doc_a.c_str(), doc_b.empty() ? nullptr : doc_b.c_str(), &opts,
                                &out.p, &json.p);
      }
      check(s);
      write_out(out_path, json.str());
      std::cout << (as_json ? json.str() + "\n" : out.str());
      return s == GSPAN_OK ? kExitPass : kExitFailed;
    }
  } catch (Failure const &f) {
    return f.code;
  } catch (Json::exception const &e) {
    std::cerr << "error: unexpected engine output: " << e.what() << "\n";
    return 3;
  }
  return kExitUsage;
}
