#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rook0/action.hpp"
#include "rook0/order.hpp"
#include "rook0/rcode.hpp"
#include "rook0/reptheory.hpp"
#include "rook0/rookcore.hpp"
#include "rook0/stellar.hpp"
#include "rook0/text_io.hpp"
#include "rook0/verify.hpp"

using namespace rook0;
using nlohmann::json;

namespace {

DescentSet descent_set_arg(int n, const std::string& text) { return DescentSet(n, parse_subset(text)); }

int run(int argc, char** argv) {
  CLI::App app{"0-rook monoid toolkit: codes, orders, quotients and modules"};
  app.require_subcommand(1);
  app.fallthrough();
  int max_n = 6;
  bool as_json = false;
  app.add_option("--max-n", max_n, "bound for exhaustive scans (default 6)");
  app.add_flag("--json", as_json, "machine readable output where available");

  // enumerate n
  int en_n = 0;
  auto* cmd_enum = app.add_subcommand("enumerate", "list all rooks of size n");
  cmd_enum->add_option("n", en_n)->required();

  // code encode|decode
  auto* cmd_code = app.add_subcommand("code", "R-code bijection");
  std::string code_arg;
  auto* cmd_encode = cmd_code->add_subcommand("encode", "rook -> R-code");
  cmd_encode->add_option("rook", code_arg)->required();
  std::string decode_arg;
  auto* cmd_decode = cmd_code->add_subcommand("decode", "R-code -> rook");
  cmd_decode->add_option("rcode", decode_arg)->required();

  // normalize
  int norm_n = 0;
  std::string norm_word;
  auto* cmd_norm = app.add_subcommand("normalize", "word -> canonical R-code");
  cmd_norm->add_option("n", norm_n)->required();
  cmd_norm->add_option("word", norm_word, "e.g. \"p1 p2 p0\"")->required();

  // mul / meet / join
  std::string bin_a, bin_b;
  auto* cmd_mul = app.add_subcommand("mul", "product in the 0-rook monoid");
  cmd_mul->add_option("a", bin_a)->required();
  cmd_mul->add_option("b", bin_b)->required();
  std::string meet_a, meet_b;
  auto* cmd_meet = app.add_subcommand("meet", "greatest lower bound in the R-order");
  cmd_meet->add_option("a", meet_a)->required();
  cmd_meet->add_option("b", meet_b)->required();
  std::string join_a, join_b;
  auto* cmd_join = app.add_subcommand("join", "least upper bound in the R-order");
  cmd_join->add_option("a", join_a)->required();
  cmd_join->add_option("b", join_b)->required();

  // hasse
  int hasse_n = 0;
  bool hasse_dot = false, hasse_cayley = false;
  auto* cmd_hasse = app.add_subcommand("hasse", "order diagram exports");
  cmd_hasse->add_option("n", hasse_n)->required();
  cmd_hasse->add_flag("--dot", hasse_dot, "DOT output");
  cmd_hasse->add_flag("--cayley", hasse_cayley, "right Cayley graph with loops");

  // counts
  int counts_n = 0;
  bool c_fz = false, c_chains = false, c_irr = false;
  auto* cmd_counts = app.add_subcommand("counts", "enumerative statistics");
  cmd_counts->add_option("n", counts_n)->required();
  cmd_counts->add_flag("--first-zero", c_fz);
  cmd_counts->add_flag("--chains", c_chains);
  cmd_counts->add_flag("--irreducibles", c_irr);

  // cartan
  int cartan_n = 0;
  std::string cartan_format = "csv";
  auto* cmd_cartan = app.add_subcommand("cartan", "Cartan matrix of R_n^0");
  cmd_cartan->add_option("n", cartan_n)->required();
  cmd_cartan->add_option("--format", cartan_format, "csv or json");

  // idempotents
  int idem_n = 0;
  auto* cmd_idem = app.add_subcommand("idempotents", "the 2^n parabolic zeros");
  cmd_idem->add_option("n", idem_n)->required();

  // descent-class
  int dc_n = 0;
  std::string dc_set;
  auto* cmd_dc = app.add_subcommand("descent-class", "rooks with the given right descent set");
  cmd_dc->add_option("n", dc_n)->required();
  cmd_dc->add_option("set", dc_set, "e.g. \"{0,2}\"")->required();

  // decompose-projective
  std::string dp_comp;
  auto* cmd_dp = app.add_subcommand("decompose-projective",
                                    "restriction of a projective module to the 0-Hecke monoid");
  cmd_dp->add_option("composition", dp_comp, "extended composition, e.g. \"(0,2,1)\"")->required();

  // induct-simple / restrict-simple / induct-projective
  int is_n = 0, is_m = 0;
  std::string is_i, is_j;
  bool is_h = false;
  auto* cmd_is = app.add_subcommand("induct-simple", "induction of simple modules along the tower");
  cmd_is->add_option("n", is_n)->required();
  cmd_is->add_option("I", is_i)->required();
  cmd_is->add_option("m", is_m)->required();
  cmd_is->add_option("J", is_j)->required();
  cmd_is->add_flag("--hecke", is_h, "second factor is the 0-Hecke monoid");

  int rs_n = 0, rs_m = 0;
  std::string rs_j;
  auto* cmd_rs = app.add_subcommand("restrict-simple", "restriction of a simple module");
  cmd_rs->add_option("n", rs_n)->required();
  cmd_rs->add_option("m", rs_m)->required();
  cmd_rs->add_option("J", rs_j, "descent set of size n+m")->required();

  int ip_n = 0, ip_m = 0;
  std::string ip_i, ip_j;
  auto* cmd_ip = app.add_subcommand("induct-projective", "induction of projective modules");
  cmd_ip->add_option("n", ip_n)->required();
  cmd_ip->add_option("I", ip_i)->required();
  cmd_ip->add_option("m", ip_m)->required();
  cmd_ip->add_option("J", ip_j)->required();

  // stellar
  auto* cmd_st = app.add_subcommand("stellar", "stellar quotients");
  int st_n = 0, st_k_arg = 1;
  auto* cmd_st_card = cmd_st->add_subcommand("card", "|st_k(R_n)|");
  cmd_st_card->add_option("n", st_n)->required();
  cmd_st_card->add_option("k", st_k_arg)->required();
  std::string st_rook;
  int st_proj_k = 1;
  auto* cmd_st_proj = cmd_st->add_subcommand("project", "apply st_k");
  cmd_st_proj->add_option("k", st_proj_k)->required();
  cmd_st_proj->add_option("rook", st_rook)->required();
  int st_verify_n = 0;
  auto* cmd_st_ver = cmd_st->add_subcommand("verify", "quotient relation and sublattice checks");
  cmd_st_ver->add_option("n", st_verify_n)->required();

  // branching
  int br_n = 0;
  std::string br_side = "left";
  bool br_dot = false;
  auto* cmd_br = app.add_subcommand("branching", "dual branching graph between levels n and n+1");
  cmd_br->add_option("n", br_n)->required();
  cmd_br->add_option("--side", br_side, "left or right");
  cmd_br->add_flag("--dot", br_dot);

  // verify
  std::string suite;
  auto* cmd_verify = app.add_subcommand("verify", "run an invariant suite");
  cmd_verify->add_option("suite", suite, "rookcore|action|rcode|matsumoto|order|stellar|reptheory|all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit with 2, --help with 0
  }

  if (*cmd_enum) {
    for (const RookVector& r : enumerate_rooks(en_n)) std::cout << format_rook(r) << "\n";
  } else if (*cmd_code) {
    if (*cmd_encode) std::cout << format_rcode(encode(parse_rook(code_arg))) << "\n";
    if (*cmd_decode) std::cout << format_rook(decode(parse_rcode(decode_arg))) << "\n";
  } else if (*cmd_norm) {
    std::cout << format_rcode(normalize(parse_genword(norm_word, norm_n))) << "\n";
  } else if (*cmd_mul) {
    std::cout << format_rook(mul(parse_rook(bin_a), parse_rook(bin_b))) << "\n";
  } else if (*cmd_meet) {
    std::cout << format_rook(meet(parse_rook(meet_a), parse_rook(meet_b))) << "\n";
  } else if (*cmd_join) {
    std::cout << format_rook(join(parse_rook(join_a), parse_rook(join_b))) << "\n";
  } else if (*cmd_hasse) {
    const GraphFlavor flavor = hasse_cayley ? GraphFlavor::RightCayley : GraphFlavor::Hasse;
    if (hasse_dot) {
      std::cout << export_dot(hasse_n, flavor, max_n);
    } else {
      const auto edges = hasse_cayley ? cayley_edges(hasse_n, true) : hasse_edges(hasse_n, max_n);
      for (const LabeledEdge& e : edges)
        std::cout << format_rook(e.from) << " -> " << format_rook(e.to) << " [p" << e.gen.index
                  << "]\n";
    }
  } else if (*cmd_counts) {
    json j;
    j["n"] = counts_n;
    if (c_fz) j["first_zero"] = count_by_first_zero(counts_n);
    if (c_chains) {
      const ChainCounts cc = chain_counts(counts_n, max_n);
      j["maximal"] = cc.maximal;
      j["min_length"] = cc.min_length_count;
    }
    if (c_irr) {
      j["meet"] = meet_irreducibles(counts_n).size();
      j["join"] = join_irreducibles(counts_n).size();
    }
    std::cout << j.dump() << "\n";
  } else if (*cmd_cartan) {
    const CartanMatrix cm = cartan_matrix(cartan_n, max_n);
    std::cout << (cartan_format == "json" || as_json ? cartan_to_json(cm) + "\n" : cartan_to_csv(cm));
  } else if (*cmd_idem) {
    for (const RookVector& e : idempotents(idem_n))
      std::cout << format_subset(d_r(e).members()) << " " << format_rook(e) << "\n";
  } else if (*cmd_dc) {
    for (const RookVector& r : descent_class(descent_set_arg(dc_n, dc_set)))
      std::cout << format_rook(r) << "\n";
  } else if (*cmd_dp) {
    std::cout << formal_sum_to_json(decompose_projective(parse_composition(dp_comp))) << "\n";
  } else if (*cmd_is) {
    const DescentSet i = descent_set_arg(is_n, is_i), j = descent_set_arg(is_m, is_j);
    const Induction ind = is_h ? ind_simple_RxH(i, j) : tower_ind_simple(i, j);
    json out;
    out["basis"] = json::array();
    for (const RookVector& b : ind.basis) out["basis"].push_back(format_rook(b));
    out["simples"] = json::parse(formal_sum_to_json(ind.simples));
    std::cout << out.dump() << "\n";
  } else if (*cmd_rs) {
    const auto [a, b] = tower_res_simple(rs_n, rs_m, descent_set_arg(rs_n + rs_m, rs_j));
    std::cout << format_subset(a.members()) << " (x) " << format_subset(b.members()) << "\n";
  } else if (*cmd_ip) {
    std::cout << formal_sum_to_json(
                     tower_ind_projective(descent_set_arg(ip_n, ip_i), descent_set_arg(ip_m, ip_j)))
              << "\n";
  } else if (*cmd_st) {
    if (*cmd_st_card) std::cout << stellar_card(st_n, st_k_arg) << "\n";
    if (*cmd_st_proj) std::cout << format_rook(st_k(parse_rook(st_rook), st_proj_k)) << "\n";
    if (*cmd_st_ver) {
      const StellarReport sr = verify_stellar(st_verify_n, max_n);
      for (const StellarCheck& c : sr.checks)
        std::cout << (c.holds ? "[ok]   " : "[FAIL] ") << c.name
                  << (c.witness.empty() ? "" : "  witness: " + c.witness) << "\n";
      return sr.all_hold() ? 0 : 1;
    }
  } else if (*cmd_br) {
    const auto edges = branching_graph(br_n, br_side == "right" ? BranchSide::Right : BranchSide::Left, max_n);
    if (br_dot) {
      std::cout << branching_to_dot(edges);
    } else {
      for (const BranchEdge& e : edges)
        std::cout << format_subset(e.from.members()) << " -> " << format_subset(e.to.members())
                  << " x" << e.mult << "\n";
    }
  } else if (*cmd_verify) {
    VerifyOptions opts;
    opts.max_n_linear = max_n;
    opts.max_n_exhaustive = std::min(max_n, 4);
    const VerifyReport rep = run_suite(suite, opts);
    for (const CheckResult& c : rep.checks)
      std::cout << (c.pass ? "[ok]   " : "[FAIL] ") << c.name
                << (c.detail.empty() ? "" : "  witness: " + c.detail) << "\n";
    return rep.all_pass() ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    // domain errors reaching the CLI come from bad arguments
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
