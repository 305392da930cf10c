// sqfsum -- counts of primitive squareful triples x + y = z, per-conic local
// densities, and the leading-constant series, behind one CLI.
//
// Subcommands: squareful, count, table, figure, constant, density, conic,
// boxes.  Exit codes: 0 success, 1 budget refusal, 2 invalid arguments.

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqfsum/constant.hpp"
#include "sqfsum/counting.hpp"
#include "sqfsum/localdensity.hpp"
#include "sqfsum/squareful.hpp"

namespace {

using nlohmann::json;
using namespace sqf;

std::string format_ratio(double r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9f", r);
  return buf;
}

std::string record_csv(const TripleCountRecord& rec) {
  return std::to_string(rec.bound) + "," + std::to_string(rec.count) + "," +
         format_ratio(rec.ratio);
}

// temp file in the target directory, then rename
void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

void append_atomic(const std::string& path, const std::string& row) {
  std::string existing;
  if (std::filesystem::exists(path)) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    existing = ss.str();
  }
  if (!existing.empty() && existing.back() != '\n') existing += '\n';
  write_atomic(path, existing + row + "\n");
}

std::array<u64, 3> parse_shape(const std::string& arg) {
  std::array<u64, 3> y{};
  std::stringstream ss(arg);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= 3) throw std::invalid_argument("--y expects Y0,Y1,Y2");
    y[(size_t)i++] = std::stoull(item);
  }
  if (i != 3) throw std::invalid_argument("--y expects Y0,Y1,Y2");
  return y;
}

std::string rat_str(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

struct CommonOpts {
  int threads = 1;
  double c_ref = kReferenceConstant;
  u64 count_budget = 4'000'000'000ULL;
};

int run(int argc, char** argv) {
  CLI::App app{"squareful triple counts, conic local densities, constant series"};
  app.require_subcommand(1);
  CommonOpts common;

  // --- squareful ---
  auto* sc_squareful = app.add_subcommand("squareful", "enumerate or count squareful numbers");
  u64 sq_bound = 0;
  bool sq_list = false, sq_count = false;
  sc_squareful->add_option("--bound", sq_bound, "upper bound B")->required();
  sc_squareful->add_flag("--list", sq_list, "emit the numbers, one per line");
  sc_squareful->add_flag("--count", sq_count, "emit the count (default)");

  // --- count ---
  auto* sc_count = app.add_subcommand("count", "count primitive triples x + y = z up to B");
  u64 ct_bound = 0;
  std::string ct_csv;
  bool ct_json = false;
  sc_count->add_option("--bound", ct_bound, "upper bound B")->required();
  sc_count->add_option("--threads", common.threads, "worker threads");
  sc_count->add_option("--csv", ct_csv, "append the row B,n1,ratio to this file");
  sc_count->add_flag("--json", ct_json, "print a JSON object instead of CSV");
  sc_count->add_option("--cref", common.c_ref, "reference constant for the ratio column");
  sc_count->add_option("--budget", common.count_budget, "largest accepted bound");

  // --- table ---
  auto* sc_table = app.add_subcommand("table", "rows B = 10^7 .. 10^maxexp of B,n1,ratio");
  int tb_maxexp = 7;
  int tb_budget_exp = 9;
  bool tb_header = false;
  std::string tb_out;
  sc_table->add_option("--max-exp", tb_maxexp, "largest exponent")->required();
  sc_table->add_option("--budget-exp", tb_budget_exp, "refuse exponents above this (default 9)");
  sc_table->add_option("--threads", common.threads, "worker threads");
  sc_table->add_option("--cref", common.c_ref, "reference constant");
  sc_table->add_flag("--header", tb_header, "emit a header row");
  sc_table->add_option("--out", tb_out, "write to this file instead of stdout");

  // --- figure ---
  auto* sc_figure = app.add_subcommand("figure", "log2(B),ratio pairs for B = 2^k");
  int fg_from = 10, fg_to = 20, fg_step = 1;
  std::string fg_out;
  sc_figure->add_option("--from", fg_from, "first exponent k")->required();
  sc_figure->add_option("--to", fg_to, "last exponent k")->required();
  sc_figure->add_option("--step", fg_step, "exponent step");
  sc_figure->add_option("--threads", common.threads, "worker threads");
  sc_figure->add_option("--cref", common.c_ref, "reference constant");
  sc_figure->add_option("--budget", common.count_budget, "largest accepted bound");
  sc_figure->add_option("--out", fg_out, "write to this file instead of stdout");

  // --- constant ---
  auto* sc_constant = app.add_subcommand("constant", "series partial sum with tail bracket");
  u32 cn_cutoff = 1000;
  bool cn_cross = false, cn_json = false;
  sc_constant->add_option("--cutoff", cn_cutoff, "series cutoff D")->required();
  sc_constant->add_flag("--cross-check", cn_cross, "also run the direct y-sum oracle");
  sc_constant->add_flag("--json", cn_json, "print a JSON object");
  sc_constant->add_option("--threads", common.threads, "worker threads");
  sc_constant->add_option("--cref", common.c_ref, "reference value for containment");

  // --- density ---
  auto* sc_density = app.add_subcommand("density", "local densities of the conic C_y");
  std::string dn_y;
  std::string dn_place = "all";
  int dn_brute = 0;
  sc_density->add_option("--y", dn_y, "shape Y0,Y1,Y2")->required();
  sc_density->add_option("--place", dn_place, "p | inf | all");
  sc_density->add_option("--brute", dn_brute, "also compute N*/p^2r by enumeration at this r");

  // --- conic ---
  auto* sc_conic = app.add_subcommand("conic", "count points of height <= sqrt(B) on C_y");
  std::string co_y;
  u64 co_bound = 0;
  bool co_zero = false;
  sc_conic->add_option("--y", co_y, "shape Y0,Y1,Y2")->required();
  sc_conic->add_option("--bound", co_bound, "height^2 bound B")->required();
  sc_conic->add_flag("--include-zero", co_zero, "include points with a zero coordinate");

  // --- boxes ---
  auto* sc_boxes = app.add_subcommand("boxes", "dyadic-box partition of the triple count");
  u64 bx_bound = 0;
  bool bx_list = false;
  sc_boxes->add_option("--bound", bx_bound, "upper bound B")->required();
  sc_boxes->add_flag("--list", bx_list, "print each box with a nonzero count");
  sc_boxes->add_option("--threads", common.threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (char& c : msg)
      if (c == '\n') c = ' ';
    std::cerr << "error: invalid-argument: " << msg << "\n";
    return 2;
  }

  if (sc_squareful->parsed()) {
    if (sq_list) {
      auto v = enumerate_squareful(sq_bound);
      std::string out;
      out.reserve(v.size() * 8);
      for (u64 k : v) out += std::to_string(k) + "\n";
      std::fputs(out.c_str(), stdout);
    } else {
      (void)sq_count;
      std::printf("%llu\n", (unsigned long long)count_squareful(sq_bound).count);
    }
    return 0;
  }

  if (sc_count->parsed()) {
    if (ct_bound > common.count_budget)
      throw BudgetExceeded("count: bound exceeds budget " +
                           std::to_string(common.count_budget));
    u64 n1 = count_triples(ct_bound, common.threads);
    TripleCountRecord rec = make_record(ct_bound, n1, common.c_ref);
    if (ct_json) {
      json j{{"bound", rec.bound}, {"count", rec.count}, {"ratio", rec.ratio}};
      std::printf("%s\n", j.dump().c_str());
    } else {
      std::printf("%s\n", record_csv(rec).c_str());
    }
    if (!ct_csv.empty()) append_atomic(ct_csv, record_csv(rec));
    return 0;
  }

  if (sc_table->parsed()) {
    if (tb_maxexp < 7 || tb_maxexp > 18)
      throw std::invalid_argument("table: --max-exp must be in [7, 18]");
    if (tb_maxexp > tb_budget_exp)
      throw BudgetExceeded("table: exponent exceeds budget " +
                           std::to_string(tb_budget_exp));
    u64 bmax = 1;
    for (int i = 0; i < tb_maxexp; ++i) bmax *= 10;
    auto sq = enumerate_squareful(bmax);
    std::string out;
    if (tb_header) out += "B,n1,ratio\n";
    u64 b = 10'000'000ULL;
    for (int e = 7; e <= tb_maxexp; ++e, b *= 10) {
      u64 n1 = count_triples(sq, b, common.threads);
      out += record_csv(make_record(b, n1, common.c_ref)) + "\n";
    }
    if (tb_out.empty())
      std::fputs(out.c_str(), stdout);
    else
      write_atomic(tb_out, out);
    return 0;
  }

  if (sc_figure->parsed()) {
    if (fg_step < 1) throw std::invalid_argument("figure: --step must be >= 1");
    if (fg_from < 1 || fg_to < fg_from || fg_to >= 63)
      throw std::invalid_argument("figure: exponent range invalid");
    if ((1ULL << fg_to) > common.count_budget)
      throw BudgetExceeded("figure: 2^to exceeds budget " +
                           std::to_string(common.count_budget));
    auto sq = enumerate_squareful(1ULL << fg_to);
    std::string out;
    for (int k = fg_from; k <= fg_to; k += fg_step) {
      u64 b = 1ULL << k;
      u64 n1 = count_triples(sq, b, common.threads);
      out += std::to_string(k) + "," +
             format_ratio(make_record(b, n1, common.c_ref).ratio) + "\n";
    }
    if (fg_out.empty())
      std::fputs(out.c_str(), stdout);
    else
      write_atomic(fg_out, out);
    return 0;
  }

  if (sc_constant->parsed()) {
    ConstantEstimate est = constant_partial(cn_cutoff, common.threads);
    if (cn_json) {
      json j{{"cutoff", est.cutoff},
             {"partial", est.partial},
             {"tail_bound", est.tail_bound},
             {"bracket_lo", est.bracket_lo()},
             {"bracket_hi", est.bracket_hi()},
             {"contains_reference", est.contains(common.c_ref)}};
      if (cn_cross) j["cross_check"] = constant_via_y(cn_cutoff);
      std::printf("%s\n", j.dump().c_str());
    } else {
      std::printf("partial      %.15f\n", est.partial);
      std::printf("tail_bound   %.15f\n", est.tail_bound);
      std::printf("bracket      [%.15f, %.15f]\n", est.bracket_lo(), est.bracket_hi());
      std::printf("contains %.9f: %s\n", common.c_ref,
                  est.contains(common.c_ref) ? "yes" : "no");
      if (cn_cross) {
        double oracle = constant_via_y(cn_cutoff);
        std::printf("cross_check  %.15f  (|diff| = %.3g)\n", oracle,
                    std::abs(oracle - est.partial));
      }
    }
    return 0;
  }

  if (sc_density->parsed()) {
    ConicShape y(parse_shape(dn_y));
    auto print_place = [&](u64 p) {
      if (p == 2) {
        std::printf("p=2 sigma2 %d\n", sigma2(y));
        if (dn_brute >= 3)
          std::printf("p=2 brute(r=%d) %s\n", dn_brute,
                      rat_str(brute_density(2, dn_brute, y)).c_str());
      } else if (y.product() % p == 0) {
        std::printf("p=%llu bad %s\n", (unsigned long long)p,
                    rat_str(odd_bad_density(p, y)).c_str());
        if (dn_brute >= 1)
          std::printf("p=%llu brute(r=%d) %s\n", (unsigned long long)p, dn_brute,
                      rat_str(brute_density(p, dn_brute, y)).c_str());
      } else {
        std::printf("p=%llu good %s\n", (unsigned long long)p,
                    rat_str(good_density(p, y)).c_str());
      }
    };
    if (dn_place == "all") {
      print_place(2);
      FactoredInteger f = factor_trial(y.product());
      for (u64 p : f.primes)
        if (p != 2) print_place(p);
      std::printf("inf %.15f\n", infinite_density(y));
      std::printf("tamagawa %.15f\n", tamagawa(y));
      std::printf("peyre %.15f\n", peyre_constant(y));
    } else if (dn_place == "inf") {
      std::printf("inf %.15f\n", infinite_density(y));
    } else {
      print_place(std::stoull(dn_place));
    }
    return 0;
  }

  if (sc_conic->parsed()) {
    ConicShape y(parse_shape(co_y));
    u64 H = isqrt64(co_bound);
    ConicCountOptions opt;
    opt.include_zero_coords = co_zero;
    u64 n = conic_count(y, H, opt);
    double pred = peyre_constant(y) * std::sqrt((double)co_bound);
    std::printf("count %llu\n", (unsigned long long)n);
    if (pred > 0)
      std::printf("ratio %.9f\n", (double)n / pred);
    else
      std::printf("ratio n/a (vanishing constant)\n");
    return 0;
  }

  if (sc_boxes->parsed()) {
    u64 direct = count_triples(bx_bound, common.threads);
    u64 sum = 0;
    size_t nonzero = 0;
    for (const DyadicBox& box : admissible_boxes(bx_bound)) {
      u64 n = count_triples_boxed(box, bx_bound);
      sum += n;
      if (n > 0) {
        ++nonzero;
        if (bx_list)
          std::printf("box x=(%d,%d,%d) y=(%d,%d,%d) count %llu\n",
                      box.x_exp[0], box.x_exp[1], box.x_exp[2], box.y_exp[0],
                      box.y_exp[1], box.y_exp[2], (unsigned long long)n);
      }
    }
    std::printf("boxes_nonzero %zu\n", nonzero);
    std::printf("boxed_sum %llu\n", (unsigned long long)sum);
    std::printf("direct %llu\n", (unsigned long long)direct);
    std::printf("match %s\n", sum == direct ? "yes" : "no");
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sqf::BudgetExceeded& e) {
    std::cerr << "error: budget-exceeded: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid-argument: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: invalid-argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 1;
  }
}
