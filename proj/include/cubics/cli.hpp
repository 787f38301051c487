#pragma once

// Command-line front end. Subcommands:
//
//   check-d <d>                        condition report + birationality verdicts
//   enumerate --condition C --max D    all admissible d up to D satisfying C
//   pell <D> [--rhs N]                 fundamental or generalized Pell solution
//   movable-cone --n <n> --d <d>       Bayer-Macri case split and walls
//   construct-w <d>                    the isotropic witness for (***')
//   lattice {det|snf|disc-group|complement} --gram G [--vector v]
//   schubert {pullbacks|verify}        the intersection-theory pipeline
//
// Every subcommand takes --json. Exit codes: 0 success, 2 usage error,
// 3 internal invariant violation. Nothing is printed without being
// re-verified first.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cubics/jsonio.hpp"
#include "cubics/pullbacks.hpp"

namespace cubics::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kDefect = 3;

namespace detail {

inline Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
}

inline const char* yn(bool b) { return b ? "yes" : "no"; }

inline std::string pic_str(const HilbPicClass& c) {
    std::string s;
    if (c.x != 0) {
        if (c.x == -1)
            s += "-H";
        else if (c.x == 1)
            s += "H";
        else
            s += c.x.get_str() + "H";
    }
    if (c.y != 0) {
        Int ay = abs(c.y);
        if (s.empty())
            s += (c.y < 0 ? "-" : "");
        else
            s += (c.y < 0 ? " - " : " + ");
        if (ay != 1) s += ay.get_str();
        s += "B";
    }
    return s.empty() ? "0" : s;
}

inline Json parse_json_or_file(const std::string& arg) {
    if (!arg.empty() && (arg[0] == '[' || arg[0] == '{')) return Json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open '" + arg + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return Json::parse(buf.str());
}

inline LatticeVector parse_vector(const std::string& arg) {
    if (!arg.empty() && arg[0] == '[') return vector_from_json(Json::parse(arg));
    LatticeVector v;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(parse_int(tok));
    if (v.empty()) throw std::invalid_argument("empty vector");
    return v;
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// --- check-d ---------------------------------------------------------------

inline void cmd_check_d(std::ostream& out, const Int& d, bool json) {
    ConditionReport r = condition_report(d);
    if (r.star2.holds && mod_floor(2 * *r.star2.witness_n * *r.star2.witness_n +
                                       2 * *r.star2.witness_n + 2,
                                   d) != 0)
        throw internal_error("check-d: (**) witness fails re-check");
    if (r.star3.holds && r.d * *r.star3.witness_a * *r.star3.witness_a !=
                             2 * *r.star3.witness_n * *r.star3.witness_n + 2 * *r.star3.witness_n + 2)
        throw internal_error("check-d: (***) witness fails re-check");
    if (r.star3p.holds && r.d * *r.star3p.witness_a * *r.star3p.witness_a != a2_norm(*r.star3p.witness_n))
        throw internal_error("check-d: (***') witness fails re-check");
    if (json) {
        emit(out, report_json(r));
        return;
    }
    out << "d = " << d.get_str() << "\n";
    out << "(*)    star   : " << yn(r.star) << "\n";
    out << "(**)   star2  : " << yn(r.star2.holds);
    if (r.star2.holds)
        out << "   witness n = " << r.star2.witness_n->get_str();
    else
        out << "   (" << r.star2.obstruction << ")";
    out << "\n";
    out << "(**')  star2p : " << yn(r.star2p.holds);
    if (!r.star2p.holds) out << "   (" << r.star2p.evidence << ")";
    out << "\n";
    for (int variant = 0; variant < 2; ++variant) {
        const Star3Verdict& v = variant ? r.star3p : r.star3;
        out << (variant ? "(***') star3p : " : "(***)  star3  : ") << yn(v.holds);
        if (v.holds)
            out << "   witness (n, a) = (" << v.witness_n->get_str() << ", " << v.witness_a->get_str()
                << ")";
        out << "\n";
    }
    out << "Z birational to moduli of sheaves on a K3 : " << yn(r.moduli_of_sheaves()) << "\n";
    out << "Z birational to moduli of twisted sheaves : " << yn(r.twisted_moduli()) << "\n";
    out << "Z birational to Hilb^4 of a K3            : " << yn(r.hilb4()) << "\n";
    out << "F birational to Hilb^2 of a K3            : " << yn(r.hilb2()) << "\n";
    out << "in C_8 (contains a plane, Z undefined)    : " << yn(r.c8) << "\n";
}

// --- enumerate ---------------------------------------------------------------

inline Condition condition_from_name(const std::string& name) {
    if (name == "star") return Condition::star;
    if (name == "star2") return Condition::star2;
    if (name == "star2p") return Condition::star2p;
    if (name == "star3") return Condition::star3;
    if (name == "star3p") return Condition::star3p;
    throw std::invalid_argument("unknown condition '" + name + "'");
}

inline void cmd_enumerate(std::ostream& out, const std::string& cond, const Int& max_d, int threads,
                          bool json) {
    std::vector<Int> ds = enumerate_condition(condition_from_name(cond), max_d, threads);
    if (json) {
        Json arr = Json::array();
        for (const Int& d : ds) arr.push_back(int_json(d));
        emit(out, Json{{"condition", cond}, {"max", int_json(max_d)}, {"ds", arr}});
        return;
    }
    for (size_t i = 0; i < ds.size(); ++i) out << (i ? " " : "") << ds[i].get_str();
    out << "\n";
}

// --- pell ---------------------------------------------------------------------

inline void cmd_pell(std::ostream& out, const Int& D, const Int& rhs, bool json) {
    if (rhs == 1) {
        PellSolution s = pell_fundamental(D);
        if (s.x * s.x - D * s.y * s.y != 1) throw internal_error("pell: solution fails re-check");
        if (json)
            emit(out, Json{{"D", int_json(D)},
                           {"rhs", 1},
                           {"solvable", true},
                           {"x", int_json(s.x)},
                           {"y", int_json(s.y)},
                           {"minimal", true}});
        else
            out << "x=" << s.x.get_str() << " y=" << s.y.get_str() << "\n";
        return;
    }
    PellLikeSolution s = pell_like_solve(1, D, rhs);
    if (s.undecided()) throw internal_error("pell: solver undecided (" + s.certificate + ")");
    if (s.solved() && s.x * s.x - D * s.y * s.y != rhs)
        throw internal_error("pell: solution fails re-check");
    if (json) {
        emit(out, Json{{"D", int_json(D)},
                       {"rhs", int_json(rhs)},
                       {"solvable", s.solved()},
                       {"x", s.solved() ? int_json(s.x) : Json(nullptr)},
                       {"y", s.solved() ? int_json(s.y) : Json(nullptr)},
                       {"certificate", s.certificate}});
        return;
    }
    if (s.solved())
        out << "x=" << s.x.get_str() << " y=" << s.y.get_str() << "\n";
    else
        out << "no solution (" << s.certificate << ")\n";
}

// --- movable-cone ----------------------------------------------------------

inline void cmd_movable_cone(std::ostream& out, long n, const Int& d, bool json) {
    HilbContext ctx(n, d);
    MovableConeResult r = movable_cone(ctx);
    if (json) {
        emit(out, movable_cone_json(r));
        return;
    }
    out << "case: " << r.case_name() << "\n";
    out << "d(n-1) = " << r.dn.get_str() << (r.dn_is_square ? ", a perfect square" : ", not a perfect square")
        << "\n";
    if (r.cone_case == MovableConeResult::Case::a) {
        out << "classification only; " << r.note << "\n";
        return;
    }
    out << "(n-1)X^2 - dY^2 = 1: "
        << (r.case_b.solved() ? "solvable (X=" + r.case_b.x.get_str() + ", Y=" + r.case_b.y.get_str() + ")"
                              : "no solution (" + r.case_b.certificate + ")")
        << "\n";
    if (r.cone_case == MovableConeResult::Case::b) {
        out << "classification only; " << r.note << "\n";
        return;
    }
    out << "minimal X^2 - " << r.dn.get_str() << "Y^2 = 1: X = " << r.pell->x.get_str()
        << ", Y = " << r.pell->y.get_str() << "\n";
    out << "movable cone spanned by " << pic_str(*r.wall1) << " and " << pic_str(*r.wall2) << "\n";
    out << "X mod (n-1) = " << r.congruence_mod_nminus1->get_str() << " (diagnostic)\n";
}

// --- construct-w -------------------------------------------------------------

inline void cmd_construct_w(std::ostream& out, const Int& d, bool json) {
    WWitness w = construct_w(d);
    LatticeVector diff{-1, 1, 0};
    Int chi_ww = pairing(w.lattice, w.w, w.w);
    Int chi_wd = pairing(w.lattice, w.w, diff);
    if (chi_ww != 0 || chi_wd != 1) throw internal_error("construct-w: pairing re-check failed");
    if (json) {
        emit(out, Json{{"d", int_json(w.d)},
                       {"k", int_json(w.k)},
                       {"n", int_json(w.n)},
                       {"a", int_json(w.a)},
                       {"m", int_json(w.m)},
                       {"w", vector_json(w.w)},
                       {"gram", matrix_json(w.lattice.gram)},
                       {"chi_w_w", int_json(chi_ww)},
                       {"chi_w_lambda2_minus_lambda1", int_json(chi_wd)}});
        return;
    }
    out << "d = " << w.d.get_str() << " = 6k + 2 with k = " << w.k.get_str() << "\n";
    out << "witness: n = " << w.n.get_str() << ", a = " << w.a.get_str()
        << " (d a^2 = 6n^2 + 6n + 2), m = (a-1)/3 = " << w.m.get_str() << "\n";
    out << "w = (" << w.w[0].get_str() << ")*lambda1 + (" << w.w[1].get_str() << ")*lambda2 + ("
        << w.w[2].get_str() << ")*tau\n";
    out << "chi(w, w) = 0\n";
    out << "chi(w, lambda2 - lambda1) = 1\n";
}

// --- lattice -----------------------------------------------------------------

inline void cmd_lattice(std::ostream& out, const std::string& op, const std::string& gram_arg,
                        const std::string& vector_arg, bool json) {
    IntegralLattice lat = lattice_from_json(parse_json_or_file(gram_arg));
    if (op == "det") {
        Int d = gram_det(lat);
        if (json)
            emit(out, Json{{"det", int_json(d)}});
        else
            out << "det = " << d.get_str() << "\n";
        return;
    }
    if (op == "snf") {
        SmithResult snf = smith_normal_form(lat.gram);
        IntMat check = mul(snf.U, mul(lat.gram, snf.V));
        for (long i = 0; i < check.rows; ++i)
            for (long j = 0; j < check.cols; ++j)
                if (check.at(i, j) != ((i == j) ? snf.diag[i] : Int(0)))
                    throw internal_error("lattice snf: transform re-check failed");
        Int du = det(snf.U), dv = det(snf.V);
        if ((du != 1 && du != -1) || (dv != 1 && dv != -1))
            throw internal_error("lattice snf: transforms are not unimodular");
        if (json) {
            Json diag = Json::array();
            for (const Int& v : snf.diag) diag.push_back(int_json(v));
            emit(out, Json{{"diag", diag}, {"U", matrix_json(snf.U)}, {"V", matrix_json(snf.V)}});
            return;
        }
        out << "diag =";
        for (const Int& v : snf.diag) out << " " << v.get_str();
        out << "\n";
        return;
    }
    if (op == "disc-group") {
        DiscriminantGroup g = discriminant_group(lat);
        if (g.order() != abs(gram_det(lat)))
            throw internal_error("lattice disc-group: order does not match |det|");
        if (json) {
            Json divisors = Json::array();
            for (const Int& v : g.divisors) divisors.push_back(int_json(v));
            emit(out, Json{{"divisors", divisors}, {"order", int_json(g.order())}, {"name", g.name()}});
            return;
        }
        out << g.name() << "\n";
        return;
    }
    if (op == "complement") {
        if (vector_arg.empty()) throw std::invalid_argument("complement requires --vector");
        LatticeVector v = parse_vector(vector_arg);
        OrthogonalComplement comp = orthogonal_complement(lat, v);
        for (long j = 0; j < comp.basis.cols; ++j) {
            LatticeVector b(lat.rank());
            for (long i = 0; i < lat.rank(); ++i) b[i] = comp.basis.at(i, j);
            if (pairing(lat, b, v) != 0)
                throw internal_error("lattice complement: basis vector pairs nonzero with v");
        }
        if (json) {
            emit(out, Json{{"basis", matrix_json(comp.basis)}, {"lattice", lattice_json(comp.lattice)}});
            return;
        }
        out << "rank = " << comp.lattice.rank() << "\n";
        out << "gram = " << lattice_json(comp.lattice)["gram"].dump() << "\n";
        return;
    }
    throw std::invalid_argument("unknown lattice operation '" + op + "'");
}

// --- schubert ----------------------------------------------------------------

inline void cmd_schubert_pullbacks(std::ostream& out, bool json) {
    PullbackConstants c = gamma_invariants();
    if (c.rank != 4 || c.jB != 9 || c.jH != 14)
        throw internal_error("schubert pullbacks: extracted constants fail re-check");
    if (json) {
        emit(out, Json{{"untwisted", hpoly_json(c.untwisted)},
                       {"twisted", hpoly_json(c.twisted)},
                       {"rank", int_json(c.rank)},
                       {"c1", int_json(c.c1)},
                       {"jB", int_json(c.jB)},
                       {"jH", int_json(c.jH)}});
        return;
    }
    out << "i_* ch(p_* O_Gamma)              = " << hpoly_str(c.untwisted) << "\n";
    out << "i_* ch(p_* (O_Gamma (x) q*O_H))  = " << hpoly_str(c.twisted) << "\n";
    out << "rank(p_* O_Gamma) = " << c.rank.get_str() << "\n";
    out << "c_1(p_* O_Gamma)  = " << c.c1.get_str() << "h\n";
    out << "j*B = " << c.jB.get_str() << "h\n";
    out << "j*H = " << c.jH.get_str() << "h\n";
}

inline void cmd_schubert_verify(std::ostream& out, bool json) {
    struct Check {
        std::string name;
        std::string value;
        bool pass;
    };
    std::vector<Check> checks;
    auto record = [&checks](const std::string& name, const std::string& value, bool pass) {
        checks.push_back({name, value, pass});
    };

    AmbientClass s1 = AmbientClass::sigma(1, 0);
    record("deg Gr(2,6): integral of sigma_1^8", gr_integrate(s1.pow(8)).get_str(),
           gr_integrate(s1.pow(8)) == 14);
    record("Whitney: c(P) c(Q) = 1", "exact",
           total_chern(taut_sub()) * total_chern(taut_quotient()) == AmbientClass::one());

    bool duality = true;
    for (const Partition2& p : gr_basis)
        for (const Partition2& q : gr_basis) {
            bool dual = (q.a == 4 - p.b && q.b == 4 - p.a);
            if (gr_integrate(AmbientClass::sigma(p.a, p.b) * AmbientClass::sigma(q.a, q.b)) !=
                (dual ? 1 : 0))
                duality = false;
        }
    record("Poincare duality on the Schubert basis", "all 225 pairs", duality);

    HPoly degx = x_integrate(s1.pow(2));
    record("deg X = 14", degx[0].get_str(), degx[0] == 14);
    HPoly chi = x_integrate(td_tangent_x());
    record("chi(O_X) = 2", chi[0].get_str(), chi[0] == 2);
    Bundle tx = tensor(dual(taut_sub()), taut_quotient()) - Bundle{exp_nilpotent(s1) * Rat(6)};
    HPoly c2 = x_integrate(total_chern(tx).graded_piece(2));
    record("int_X c_2(T_X) = 24", c2[0].get_str(), c2[0] == 24);

    AmbientClass en = en_ch_gamma(false);
    bool low = true;
    for (int k = 0; k <= 2; ++k)
        if (en.graded_piece(k) != AmbientClass::zero()) low = false;
    record("Eagon-Northcott: ch degrees 0-2 vanish", "degrees 0, 1, 2", low);
    record("ch_3(O_Gamma) = Porteous class", "exact", en.graded_piece(3) == porteous_gamma());

    HPoly proj = x_integrate(porteous_gamma());
    record("pushforward of [Gamma] = 12h", hpoly_str(proj), proj[1] == 12 && proj[0] == 0);

    HPoly u = grr_pushforward(en_ch_gamma(false));
    HPoly expect_u{Rat(0), Rat(12), Rat(-27), Rat(65, 2), Rat(-33, 2), Rat(19, 8)};
    record("i_* ch(p_* O_Gamma)", hpoly_str(u), u == expect_u);
    HPoly t = grr_pushforward(en_ch_gamma(true));
    HPoly expect_t{Rat(0), Rat(0), Rat(42), Rat(-91), Rat(56), Rat(-35, 4)};
    record("i_* ch(p_* (O_Gamma (x) q*O_H))", hpoly_str(t), t == expect_t);

    PullbackConstants c = gamma_invariants();
    record("rank = 4", c.rank.get_str(), c.rank == 4);
    record("j*B = 9h", c.jB.get_str() + "h", c.jB == 9);
    record("j*H = 14h", c.jH.get_str() + "h", c.jH == 14);

    bool all = true;
    for (const Check& ck : checks) all = all && ck.pass;
    if (json) {
        Json arr = Json::array();
        for (const Check& ck : checks)
            arr.push_back(Json{{"name", ck.name}, {"value", ck.value}, {"pass", ck.pass}});
        emit(out, Json{{"checks", arr}, {"all_pass", all}});
    } else {
        for (const Check& ck : checks)
            out << (ck.pass ? "ok   " : "FAIL ") << ck.name << "  [" << ck.value << "]\n";
    }
    if (!all) throw internal_error("schubert verify: at least one invariant failed");
}

}  // namespace detail

// Parses and executes one command line. Arguments come in natural order,
// without the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic for special cubic fourfolds"};
    app.name("cubics");
    app.require_subcommand(1);

    std::string d_arg, max_arg, rhs_arg = "1", cond_arg, gram_arg, vector_arg, n_arg;
    int threads = 1;
    bool json_check = false, json_enum = false, json_pell = false, json_cone = false,
         json_w = false, json_lat = false, json_schubert = false;

    CLI::App* check = app.add_subcommand("check-d", "condition report for one discriminant");
    check->add_option("d", d_arg, "discriminant")->required();
    check->add_flag("--json", json_check, "emit JSON");

    CLI::App* enumerate = app.add_subcommand("enumerate", "list admissible discriminants");
    enumerate->add_option("--condition", cond_arg, "star|star2|star2p|star3|star3p")
        ->required()
        ->check(CLI::IsMember({"star", "star2", "star2p", "star3", "star3p"}));
    enumerate->add_option("--max", max_arg, "upper bound")->required();
    enumerate->add_option("--threads", threads, "shard the scan")->check(CLI::Range(1, 64));
    enumerate->add_flag("--json", json_enum, "emit JSON");

    CLI::App* pell = app.add_subcommand("pell", "solve x^2 - D y^2 = N");
    pell->add_option("D", d_arg, "positive nonsquare D")->required();
    pell->add_option("--rhs", rhs_arg, "right-hand side N (default 1)");
    pell->add_flag("--json", json_pell, "emit JSON");

    CLI::App* cone = app.add_subcommand("movable-cone", "movable cone of Hilb^n of a degree-2d K3");
    cone->add_option("--n", n_arg, "number of points")->required();
    cone->add_option("--d", d_arg, "half-degree of the K3")->required();
    cone->add_flag("--json", json_cone, "emit JSON");

    CLI::App* cw = app.add_subcommand("construct-w", "isotropic witness for (***')");
    cw->add_option("d", d_arg, "discriminant satisfying (***')")->required();
    cw->add_flag("--json", json_w, "emit JSON");

    CLI::App* lattice = app.add_subcommand("lattice", "integral lattice computations");
    lattice->require_subcommand(1);
    for (const char* op : {"det", "snf", "disc-group", "complement"}) {
        CLI::App* sub = lattice->add_subcommand(op);
        sub->add_option("--gram", gram_arg, "Gram matrix, inline JSON or file")->required();
        sub->add_option("--vector", vector_arg, "vector, JSON array or comma list");
        sub->add_flag("--json", json_lat, "emit JSON");
    }

    CLI::App* schubert = app.add_subcommand("schubert", "intersection-theory pipeline");
    schubert->require_subcommand(1);
    CLI::App* pullbacks = schubert->add_subcommand("pullbacks", "pushforward polynomials and j*B, j*H");
    pullbacks->add_flag("--json", json_schubert, "emit JSON");
    CLI::App* verify = schubert->add_subcommand("verify", "run the invariant suite");
    verify->add_flag("--json", json_schubert, "emit JSON");

    check->callback([&] { detail::cmd_check_d(out, detail::parse_int(d_arg), json_check); });
    enumerate->callback(
        [&] { detail::cmd_enumerate(out, cond_arg, detail::parse_int(max_arg), threads, json_enum); });
    pell->callback(
        [&] { detail::cmd_pell(out, detail::parse_int(d_arg), detail::parse_int(rhs_arg), json_pell); });
    cone->callback([&] {
        detail::cmd_movable_cone(out, to_long(detail::parse_int(n_arg)), detail::parse_int(d_arg),
                                 json_cone);
    });
    cw->callback([&] { detail::cmd_construct_w(out, detail::parse_int(d_arg), json_w); });
    lattice->callback([&] {
        detail::cmd_lattice(out, lattice->get_subcommands().at(0)->get_name(), gram_arg, vector_arg,
                            json_lat);
    });
    schubert->callback([&] {
        if (schubert->get_subcommands().at(0) == pullbacks)
            detail::cmd_schubert_pullbacks(out, json_schubert);
        else
            detail::cmd_schubert_verify(out, json_schubert);
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
        return kOk;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << app.help();
        return kUsage;
    } catch (const internal_error& e) {
        err << "internal invariant violation: " << e.what() << "\n";
        return kDefect;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace cubics::cli
