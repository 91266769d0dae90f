#include "gsptorsion/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace gspt {

std::string to_decimal(const mpz_class& x) { return x.get_str(); }
std::string to_decimal(std::uint64_t x) { return std::to_string(x); }

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
    return j.at(key);
}

long int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (v.is_number_integer()) return v.get<long>();
    if (v.is_string()) {
        try {
            std::size_t pos = 0;
            long x = std::stol(v.get<std::string>(), &pos);
            if (pos == v.get<std::string>().size()) return x;
        } catch (const std::exception&) {
        }
    }
    throw InvalidArgument(std::string("field '") + key + "' must be an integer");
}

std::uint64_t reduce_entry(const PrecisionContext& ctx, const Json& v) {
    if (v.is_string()) return ctx.reduce_decimal(v.get<std::string>());
    if (v.is_number_integer()) return ctx.reduce(v.get<std::int64_t>());
    throw InvalidArgument("entries must be decimal strings or integers");
}

PrecisionContext context_from(const Json& j) {
    long ell = int_field(j, "ell");
    long precision = int_field(j, "precision");
    if (ell < 2) throw InvalidArgument("ell must be a prime >= 2");
    return PrecisionContext(static_cast<std::uint64_t>(ell), static_cast<int>(precision));
}

}  // namespace

Json matrix_to_json(const ResidueMatrix& m) {
    Json entries = Json::array();
    for (auto v : m.values()) entries.push_back(to_decimal(v));
    return Json{{"ell", m.context().ell()},
                {"precision", m.context().precision()},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"entries", entries}};
}

ResidueMatrix matrix_from_json(const Json& j) {
    PrecisionContext ctx = context_from(j);
    long rows = int_field(j, "rows");
    long cols = int_field(j, "cols");
    if (rows < 1 || cols < 1) throw InvalidArgument("rows and cols must be positive");
    const Json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows * cols))
        throw InvalidArgument("entries must be an array of rows*cols values");
    ResidueMatrix m(ctx, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.set(i / static_cast<std::size_t>(cols), i % static_cast<std::size_t>(cols), reduce_entry(ctx, entries[i]));
    return m;
}

Json element_to_json(const SymplecticElement& e) {
    return Json{{"matrix", matrix_to_json(e.matrix)}, {"multiplier", to_decimal(e.multiplier)}};
}

SymplecticElement element_from_json(const Json& j) {
    ResidueMatrix m = matrix_from_json(field(j, "matrix"));
    SymplecticElement e = SymplecticElement::from_matrix(m);
    if (j.contains("multiplier") && reduce_entry(m.context(), j.at("multiplier")) != e.multiplier)
        throw NotSymplecticSimilitude("declared multiplier does not match the matrix");
    return e;
}

Json lattice_to_json(const Lattice& l) {
    return Json{{"ell", l.context().ell()},
                {"precision", l.context().precision()},
                {"ambient_rank", l.ambient_rank()},
                {"rank", l.rank},
                {"generators", matrix_to_json(l.generators)}};
}

Lattice lattice_from_json(const Json& j) {
    PrecisionContext ctx = context_from(j);
    ResidueMatrix gens = matrix_from_json(field(j, "generators"));
    if (!(gens.context() == ctx)) throw ContextMismatch("generator matrix context differs from lattice context");
    if (static_cast<long>(gens.rows()) != int_field(j, "ambient_rank"))
        throw DimensionMismatch("generator rows differ from ambient_rank");
    long rank = j.contains("rank") ? int_field(j, "rank") : static_cast<long>(gens.cols());
    if (rank < 0 || rank > static_cast<long>(gens.rows())) throw InvalidArgument("rank out of range");
    return Lattice{gens, static_cast<int>(rank)};
}

Json subgroup_to_json(const TorsionSubgroup& h) {
    Json gens = Json::array();
    for (const auto& p : h.generators) {
        const int ord = p.order_exponent(h.ctx);
        const std::uint64_t shift = h.ctx.power(h.ctx.precision() - ord);
        Json coords = Json::array();
        for (auto c : p.coords) coords.push_back(to_decimal(c / shift));
        gens.push_back(Json{{"coords", coords}, {"order_exp", ord}});
    }
    return Json{{"ell", h.ctx.ell()},
                {"precision", h.ctx.precision()},
                {"ambient_rank", h.ambient},
                {"generators", gens}};
}

TorsionSubgroup subgroup_from_json(const Json& j) {
    PrecisionContext ctx = context_from(j);
    long ambient = int_field(j, "ambient_rank");
    if (ambient < 2 || ambient % 2 != 0) throw InvalidArgument("ambient_rank must be a positive even integer");
    TorsionSubgroup h{ctx, static_cast<std::size_t>(ambient), {}};
    const Json& gens = field(j, "generators");
    if (!gens.is_array()) throw InvalidArgument("generators must be an array");
    for (const auto& g : gens) {
        const Json& coords = field(g, "coords");
        if (!coords.is_array()) throw InvalidArgument("coords must be an array");
        Vector c;
        for (const auto& v : coords) c.push_back(reduce_entry(ctx, v));
        h.add_generator(c, static_cast<int>(int_field(g, "order_exp")));
    }
    return h;
}

Json type_to_json(const SubgroupType& t) {
    return Json{{"t", t.t()}, {"exponents", t.exponents}, {"multiplicities", t.multiplicities}};
}

Json chain_to_json(const FlagChain& c) {
    Json levels = Json::array();
    for (const auto& lv : c.levels) levels.push_back(Json{{"r", lv.r}, {"s", lv.s}, {"delta", lv.delta}});
    return levels;
}

Json report_to_json(const ExponentReport& r) {
    Json table = Json::array();
    for (const auto& [w, v] : r.table) table.push_back(Json{{"witness", w}, {"value", v.to_string()}});
    return Json{{"value", r.value.to_string()}, {"maximizers", r.maximizers}, {"table", table}};
}

Json read_json_input(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw InvalidArgument("cannot open input file '" + path + "'");
        buf << in.rdbuf();
    }
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace gspt
