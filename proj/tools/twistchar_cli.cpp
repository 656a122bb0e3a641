// Command-line front end: deterministic tables for conjugacy classes,
// braiding characters, exterior series, twist counts and chromatic data,
// with optional cross-checks against the brute-force tensor oracle.
//
// Exit codes: 0 success, 1 verification mismatch, 2 cap or usage error.

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twistchar/twistchar.hpp"

namespace tc = twistchar;
using tc::Int;
using tc::io::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::string join_parts(const tc::symgroup::Partition& p) {
    if (p.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i > 0) out += '+';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

std::string join_coords(const std::vector<unsigned long>& coords) {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(coords[i]);
    }
    return out + ")";
}

void print_aligned(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << row[i];
            if (i + 1 < row.size())
                os << std::string(width[i] - row[i].size() + 2, ' ');
        }
        os << '\n';
    }
}

void print_csv(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) os << ',';
            os << row[i];
        }
        os << '\n';
    }
}

struct FormatOption {
    std::string kind = "plain";

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", kind, "Output format")
            ->check(CLI::IsMember({"json", "csv", "plain"}))
            ->capture_default_str();
    }
    bool json() const { return kind == "json"; }
    bool csv() const { return kind == "csv"; }
};

tc::graded::IntTwist make_twist(const std::string& name, long epsilon) {
    if (name == "trivial") return tc::graded::IntTwist::trivial();
    if (name == "koszul") return tc::graded::IntTwist::koszul();
    return tc::graded::IntTwist::unit(Int(epsilon));
}

// --- classes ---------------------------------------------------------------

int run_classes(unsigned long m, const FormatOption& format) {
    const auto all = tc::symgroup::partitions(m);
    if (format.json()) {
        Json rows = Json::array();
        for (const auto& lambda : all) {
            Json counts = Json::object();
            for (const auto& [k, n] : tc::symgroup::cycle_counts(lambda))
                counts.add(std::to_string(k), Json::number(n));
            rows.push(Json::object()
                          .add("partition", tc::io::to_json(lambda))
                          .add("cycles", Json::number(lambda.num_cycles()))
                          .add("cycle_counts", std::move(counts))
                          .add("centralizer_order",
                               Json::number(tc::symgroup::centralizer_order(lambda)))
                          .add("class_size", Json::number(tc::symgroup::class_size(lambda))));
        }
        std::cout << Json::object().add("m", Json::number(m)).add("rows", std::move(rows)).dump()
                  << '\n';
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"partition", "cycles", "cycle_counts", "centralizer_order", "class_size"});
    for (const auto& lambda : all) {
        std::string counts;
        for (const auto& [k, n] : tc::symgroup::cycle_counts(lambda)) {
            if (!counts.empty()) counts += ';';
            counts += std::to_string(k) + ":" + std::to_string(n);
        }
        if (counts.empty()) counts = "-";
        rows.push_back({join_parts(lambda), std::to_string(lambda.num_cycles()),
                        std::move(counts), tc::symgroup::centralizer_order(lambda).get_str(),
                        tc::symgroup::class_size(lambda).get_str()});
    }
    if (format.csv())
        print_csv(std::cout, rows);
    else
        print_aligned(std::cout, rows);
    return kExitOk;
}

// --- character -------------------------------------------------------------

bool oracle_matches(const tc::braidchar::CharacterTable<Int>& table) {
    if (table.dim < 0)
        throw tc::type_error("--verify-oracle needs a non-negative dimension");
    const auto space =
        tc::oracle::GradedVectorSpace::standard(table.dim.get_ui(), 1);
    for (const auto& row : table.rows) {
        const auto rep = tc::oracle::canonical_representative(row.cycle_type);
        const auto action = tc::oracle::perm_action(rep, space, table.m, table.twist);
        if (row.value != tc::oracle::categorical_trace(action, table.twist)) return false;
    }
    return true;
}

int run_character(const std::string& twist_name, long epsilon, long dim, unsigned long m,
                  bool verify_oracle, const FormatOption& format) {
    const auto twist = make_twist(twist_name, epsilon);
    const auto table = tc::braidchar::braiding_character(twist, Int(dim), m);
    bool verified = true;
    if (verify_oracle) verified = oracle_matches(table);

    if (format.json()) {
        Json obj = tc::io::to_json(table);
        if (verify_oracle) obj.add("oracle", Json::string(verified ? "match" : "mismatch"));
        std::cout << obj.dump() << '\n';
    } else {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"partition", "cycles", "class_size", "value", "degree"});
        for (const auto& row : table.rows)
            rows.push_back({join_parts(row.cycle_type),
                            std::to_string(row.cycle_type.num_cycles()),
                            tc::symgroup::class_size(row.cycle_type).get_str(),
                            row.value.get_str(), "t^" + std::to_string(table.degree())});
        if (format.csv()) {
            print_csv(std::cout, rows);
        } else {
            std::cout << "m: " << m << "  twist: " << twist.kind_name()
                      << "  dim: " << dim << '\n';
            print_aligned(std::cout, rows);
        }
        if (verify_oracle) std::cout << "oracle: " << (verified ? "match" : "mismatch") << '\n';
    }
    return verified ? kExitOk : kExitMismatch;
}

// --- extseries ---------------------------------------------------------------

int run_extseries(const std::string& twist_name, long epsilon, long dim, unsigned long order,
                  bool check_identity, const FormatOption& format) {
    const auto twist = make_twist(twist_name, epsilon);
    const auto series = tc::extalg::ext_series(twist, Int(dim), order);
    bool identity_holds = true;
    if (check_identity) {
        if (dim < 0) throw tc::type_error("--check-identity needs a non-negative dimension");
        identity_holds = tc::extalg::verify_sym_ext_identity(Int(dim), order).first;
    }

    if (format.json()) {
        Json obj = tc::io::to_json(series);
        if (check_identity)
            obj.add("identity", Json::string(identity_holds ? "holds" : "fails"));
        std::cout << obj.dump() << '\n';
    } else {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"n", "categorical", "underlying"});
        for (unsigned long n = 0; n <= order; ++n)
            rows.push_back({std::to_string(n), series.categorical.coeff(n).get_str(),
                            series.underlying.coeff(n).get_str()});
        if (format.csv()) {
            print_csv(std::cout, rows);
        } else {
            std::cout << "twist: " << twist.kind_name() << "  dim: " << dim
                      << "  order: " << order << '\n';
            print_aligned(std::cout, rows);
        }
        if (check_identity)
            std::cout << "identity " << (identity_holds ? "holds" : "fails") << '\n';
    }
    return identity_holds ? kExitOk : kExitMismatch;
}

// --- chromatic ---------------------------------------------------------------

int run_chromatic(unsigned long p, int n, std::vector<long> stem_orders,
                  std::vector<long> alpha, unsigned long m, const FormatOption& format) {
    tc::chromatic::StemGroup group =
        stem_orders.empty()
            ? tc::chromatic::dual_stem_group(p, n)
            : tc::chromatic::StemGroup(p, std::vector<Int>(stem_orders.begin(),
                                                           stem_orders.end()));
    tc::chromatic::StemElement element(group.orders.size(), 0);
    if (!alpha.empty()) {
        if (alpha.size() != group.orders.size())
            throw tc::type_error("--alpha must list one residue per stem order");
        for (std::size_t i = 0; i < alpha.size(); ++i) element[i] = alpha[i];
    }

    const auto decision = tc::chromatic::chromatic_decision(p, n, group, element);
    const auto table = tc::chromatic::chromatic_character(p, n, group, element, m);

    if (format.json()) {
        Json orders = Json::array();
        for (const auto& d : group.orders) orders.push(Json::number(d));
        Json residues = Json::array();
        for (const auto& a : element) residues.push(Json::number(a));
        std::cout << Json::object()
                         .add("p", Json::number(p))
                         .add("n", Json::number(static_cast<long>(n)))
                         .add("stem_orders", std::move(orders))
                         .add("alpha", std::move(residues))
                         .add("omega", Json::number(static_cast<long>(decision.omega)))
                         .add("label", Json::string(decision.label))
                         .add("table", tc::io::to_json(table))
                         .dump()
                  << '\n';
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"partition", "cycles", "value", "degree"});
    for (const auto& row : table.rows)
        rows.push_back({join_parts(row.cycle_type), std::to_string(row.cycle_type.num_cycles()),
                        row.value.get_str(), "t^" + std::to_string(table.degree())});
    if (format.csv()) {
        print_csv(std::cout, rows);
    } else {
        std::cout << "decision: " << decision.label << " (omega = " << decision.omega << ")\n";
        print_aligned(std::cout, rows);
    }
    return kExitOk;
}

// --- count-twists --------------------------------------------------------------

int run_count_twists(const std::vector<long>& units, const FormatOption& format) {
    const tc::graded::FiniteAbelianGroup group(std::vector<Int>(units.begin(), units.end()));
    const Int count = tc::graded::count_twists(group);
    if (format.json()) {
        Json orders = Json::array();
        for (const auto& d : group.orders) orders.push(Json::number(d));
        std::cout << Json::object()
                         .add("orders", std::move(orders))
                         .add("count", Json::number(count))
                         .dump()
                  << '\n';
    } else {
        std::cout << count.get_str() << '\n';
    }
    return kExitOk;
}

// --- transchromatic --------------------------------------------------------------

int run_transchromatic(unsigned long k, unsigned long j, int omega, const FormatOption& format) {
    const auto table = tc::chromatic::transchromatic_table(k, j, omega);
    if (format.json()) {
        Json rows = Json::array();
        for (const auto& row : table) rows.push(tc::io::to_json(row));
        std::cout << Json::object()
                         .add("k", Json::number(k))
                         .add("j", Json::number(j))
                         .add("omega_t", Json::number(static_cast<long>(omega)))
                         .add("rows", std::move(rows))
                         .dump()
                  << '\n';
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"coords", "valuation", "value", "action"});
    for (const auto& row : table)
        rows.push_back({join_coords(row.component.coords),
                        std::to_string(row.component.valuation), std::to_string(row.value),
                        row.action == tc::chromatic::ComponentAction::Trivial ? "trivial"
                                                                              : "induced"});
    if (format.csv())
        print_csv(std::cout, rows);
    else
        print_aligned(std::cout, rows);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of twisted graded categories"};
    app.require_subcommand(1);

    FormatOption format;

    // classes
    unsigned long classes_m = 0;
    auto* classes = app.add_subcommand("classes", "Conjugacy-class table of a symmetric group");
    classes->add_option("m", classes_m, "Number of letters")->required();
    format.attach(classes);

    // character
    std::string twist_name = "trivial";
    long epsilon = 1;
    long dim = 1;
    unsigned long power_m = 1;
    bool verify_oracle = false;
    auto* character = app.add_subcommand("character", "Braiding character table");
    character->add_option("--twist", twist_name, "Twist kind")
        ->check(CLI::IsMember({"trivial", "koszul", "unit"}))
        ->capture_default_str();
    character->add_option("--epsilon", epsilon, "Twist unit for --twist unit (+1 or -1)");
    character->add_option("--dim", dim, "Dimension of the object")->required();
    character->add_option("--m", power_m, "Tensor power")->required();
    character->add_flag("--verify-oracle", verify_oracle,
                        "Cross-check every row against the tensor oracle");
    format.attach(character);

    // extseries
    unsigned long order = 10;
    bool check_identity = false;
    auto* extseries = app.add_subcommand("extseries", "Exterior power generating function");
    extseries->add_option("--twist", twist_name, "Twist kind")
        ->check(CLI::IsMember({"trivial", "koszul", "unit"}))
        ->capture_default_str();
    extseries->add_option("--epsilon", epsilon, "Twist unit for --twist unit (+1 or -1)");
    extseries->add_option("--dim", dim, "Dimension of the object")->required();
    extseries->add_option("--order", order, "Truncation order")->capture_default_str();
    extseries->add_flag("--check-identity", check_identity,
                        "Check the symmetric/exterior series identity");
    format.attach(extseries);

    // chromatic
    unsigned long prime = 2;
    int height = 0;
    std::vector<long> stem_orders;
    std::vector<long> alpha;
    auto* chrom = app.add_subcommand("chromatic", "Chromatic braiding character decision");
    chrom->add_option("--p,--prime", prime, "Prime")->required();
    chrom->add_option("--n,--height", height, "Height")->required();
    chrom->add_option("--stem-orders", stem_orders,
                      "Cyclic orders presenting the dual stem (default: shipped table)");
    chrom->add_option("--alpha", alpha, "Residues of the twisting element (default: 0)");
    chrom->add_option("--m", power_m, "Tensor power")->capture_default_str();
    format.attach(chrom);

    // count-twists
    std::vector<long> unit_orders;
    auto* twists = app.add_subcommand("count-twists",
                                      "Number of twisted graded structures on a discrete base");
    twists->add_option("--units", unit_orders, "Cyclic orders of the unit group")->required();
    format.attach(twists);

    // transchromatic
    unsigned long depth_k = 1, depth_j = 1;
    int omega = -1;
    auto* trans = app.add_subcommand("transchromatic", "Inductive transchromatic value table");
    trans->add_option("--k", depth_k, "Exponent of the cyclic 2-group")->required();
    trans->add_option("--j", depth_j, "Loop depth")->required();
    trans->add_option("--omega", omega, "Base value omega_t (+1 or -1)")
        ->capture_default_str();
    format.attach(trans);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (classes->parsed()) return run_classes(classes_m, format);
        if (character->parsed())
            return run_character(twist_name, epsilon, dim, power_m, verify_oracle, format);
        if (extseries->parsed())
            return run_extseries(twist_name, epsilon, dim, order, check_identity, format);
        if (chrom->parsed())
            return run_chromatic(prime, height, stem_orders, alpha, power_m, format);
        if (twists->parsed()) return run_count_twists(unit_orders, format);
        if (trans->parsed()) return run_transchromatic(depth_k, depth_j, omega, format);
    } catch (const tc::enumeration_limit_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
