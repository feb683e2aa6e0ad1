#include "einq/algebra.hpp"

#include <sstream>

#include "einq/errors.hpp"

namespace einq {

namespace {

const char* family_name(AlgebraFamily f) {
    switch (f) {
        case AlgebraFamily::SU: return "su";
        case AlgebraFamily::SO: return "so";
        case AlgebraFamily::Sp: return "sp";
        case AlgebraFamily::G2: return "g2";
        case AlgebraFamily::F4: return "f4";
        case AlgebraFamily::E6: return "e6";
        case AlgebraFamily::E7: return "e7";
        case AlgebraFamily::E8: return "e8";
    }
    return "?";
}

bool is_classical(AlgebraFamily f) {
    return f == AlgebraFamily::SU || f == AlgebraFamily::SO || f == AlgebraFamily::Sp;
}

}  // namespace

AlgebraDescriptor AlgebraDescriptor::make(AlgebraFamily family, int rank_param) {
    AlgebraDescriptor d{family, rank_param};
    switch (family) {
        case AlgebraFamily::SU:
            if (rank_param < 2) throw invalid_algebra_error("su(n) requires n >= 2");
            break;
        case AlgebraFamily::SO:
            if (rank_param < 3) throw invalid_algebra_error("so(n) requires n >= 3");
            break;
        case AlgebraFamily::Sp:
            if (rank_param < 1) throw invalid_algebra_error("sp(n) requires n >= 1");
            break;
        default:
            d.rank_param = 0;
            break;
    }
    return d;
}

AlgebraDescriptor AlgebraDescriptor::parse(const std::string& name) {
    if (name == "g2") return make(AlgebraFamily::G2);
    if (name == "f4") return make(AlgebraFamily::F4);
    if (name == "e6") return make(AlgebraFamily::E6);
    if (name == "e7") return make(AlgebraFamily::E7);
    if (name == "e8") return make(AlgebraFamily::E8);
    if (name.size() >= 3) {
        std::string head = name.substr(0, 2);
        int n = 0;
        try {
            n = std::stoi(name.substr(2));
        } catch (...) {
            throw invalid_algebra_error("cannot parse algebra name: " + name);
        }
        if (head == "su") return make(AlgebraFamily::SU, n);
        if (head == "so") return make(AlgebraFamily::SO, n);
        if (head == "sp") return make(AlgebraFamily::Sp, n);
    }
    throw invalid_algebra_error("cannot parse algebra name: " + name);
}

std::string AlgebraDescriptor::name() const {
    std::string s = family_name(family);
    if (is_classical(family)) s += std::to_string(rank_param);
    return s;
}

AlgebraDescriptor canonicalized(const AlgebraDescriptor& desc) {
    if (desc.family == AlgebraFamily::SO && desc.rank_param == 3)
        return AlgebraDescriptor::make(AlgebraFamily::SU, 2);
    return desc;
}

long dimension(const AlgebraDescriptor& desc) {
    const long n = desc.rank_param;
    switch (desc.family) {
        case AlgebraFamily::SU:
            if (n < 2) throw invalid_algebra_error("su(n) requires n >= 2");
            return n * n - 1;
        case AlgebraFamily::SO:
            if (n < 3) throw invalid_algebra_error("so(n) requires n >= 3");
            return n * (n - 1) / 2;
        case AlgebraFamily::Sp:
            if (n < 1) throw invalid_algebra_error("sp(n) requires n >= 1");
            return 2 * n * n + n;
        case AlgebraFamily::G2: return 14;
        case AlgebraFamily::F4: return 52;
        case AlgebraFamily::E6: return 78;
        case AlgebraFamily::E7: return 133;
        case AlgebraFamily::E8: return 248;
    }
    throw invalid_algebra_error("unknown algebra family");
}

Rational killing_norm(const AlgebraDescriptor& desc) {
    const long n = desc.rank_param;
    switch (desc.family) {
        case AlgebraFamily::SU:
            if (n < 2) throw invalid_algebra_error("su(n) requires n >= 2");
            return rat(4 * n);
        case AlgebraFamily::SO:
            if (n == 3)
                throw use_su2_normalization_error(
                    "so(3): use the su(2) normalization (8); convert via canonicalized()");
            if (n < 4) throw invalid_algebra_error("so(n) normalization requires n >= 4");
            return rat(4 * (n - 2));
        case AlgebraFamily::Sp:
            if (n < 1) throw invalid_algebra_error("sp(n) requires n >= 1");
            return rat(4 * (n + 1));
        case AlgebraFamily::G2: return rat(16);
        case AlgebraFamily::F4: return rat(36);
        case AlgebraFamily::E6: return rat(48);
        case AlgebraFamily::E7: return rat(72);
        case AlgebraFamily::E8: return rat(120);
    }
    throw invalid_algebra_error("unknown algebra family");
}

long SemisimpleDescriptor::total_dimension() const {
    long total = abelian_dim;
    for (const auto& [desc, mult] : factors) total += mult * dimension(desc);
    return total;
}

namespace {

using AF = AlgebraFamily;

std::vector<EmbeddingIndexEntry> build_index_table() {
    auto alg = [](AF f, int n = 0) { return AlgebraDescriptor::make(f, n); };
    std::vector<EmbeddingIndexEntry> t;
    auto add = [&](std::string tag, AlgebraDescriptor sub, AlgebraDescriptor amb, Rational idx,
                   bool regular, std::string prov) {
        t.push_back({std::move(tag), sub, amb, std::move(idx), regular, std::move(prov)});
    };
    // Root-length-ratio values for regular subalgebras: norm(sub)/norm(ambient).
    add("e6.so10", alg(AF::SO, 10), alg(AF::E6), rat(2, 3), true, "family A5; root-ratio 32/48");
    add("e6.so8", alg(AF::SO, 8), alg(AF::E6), rat(1, 2), true, "family A5; root-ratio 24/48");
    add("e7.so12", alg(AF::SO, 12), alg(AF::E7), rat(5, 9), true, "family A6; root-ratio 40/72");
    add("e7.so8", alg(AF::SO, 8), alg(AF::E7), rat(1, 3), true, "family A6; root-ratio 24/72");
    add("e7.su2", alg(AF::SU, 2), alg(AF::E7), rat(1, 9), true, "family A6; root-ratio 8/72");
    add("e8.so16", alg(AF::SO, 16), alg(AF::E8), rat(7, 15), true,
        "families A7-A11, B8-B12; root-ratio 56/120");
    add("e8.so8", alg(AF::SO, 8), alg(AF::E8), rat(1, 5), true,
        "2so(8) rows A7, A9-A11, B8, B15, B16; root-ratio 24/120");
    add("e8.su2", alg(AF::SU, 2), alg(AF::E8), rat(1, 15), true,
        "8su(2) rows A8-A10, B10, B15; root-ratio 8/120");
    add("e8.su9", alg(AF::SU, 9), alg(AF::E8), rat(3, 10), true,
        "families B13, B14; root-ratio 36/120");
    add("e8.su5", alg(AF::SU, 5), alg(AF::E8), rat(1, 6), true,
        "family B17 (2su(5)); root-ratio 20/120");
    add("e6.su3", alg(AF::SU, 3), alg(AF::E6), rat(1, 4), true,
        "family B6 (3su(3)); root-ratio 12/48");
    add("e8.su3", alg(AF::SU, 3), alg(AF::E8), rat(1, 10), true,
        "family B18 (4su(3)); root-ratio 12/120");
    add("f4.so9", alg(AF::SO, 9), alg(AF::F4), rat(7, 9), true, "family B5; root-ratio 28/36");
    add("f4.so8", alg(AF::SO, 8), alg(AF::F4), rat(2, 3), true, "family B5; root-ratio 24/36");
    add("e7.su8", alg(AF::SU, 8), alg(AF::E7), rat(4, 9), true, "family B7; root-ratio 32/72");
    // Non-regular values, fixed case by case through chains or trace forms.
    add("so8.so7", alg(AF::SO, 7), alg(AF::SO, 8), rat(5, 6), false,
        "family B4; block trace ratio (7-2)/(8-2)");
    add("so8.g2", alg(AF::G2), alg(AF::SO, 8), rat(2, 3), false,
        "family B4; g2 < so(7) < so(8) chain (4/5 * 5/6)");
    add("e7.so8.in-su8", alg(AF::SO, 8), alg(AF::E7), rat(1, 6), false,
        "family B7; so(8) < su(8) chain (6/16 * 4/9)");
    add("e6.so3", canonicalized(alg(AF::SO, 3)), alg(AF::E6), rat(1, 24), false,
        "family B6; so(3) < su(3) chain (1/6 * 1/4)");
    add("e8.so9", alg(AF::SO, 9), alg(AF::E8), rat(7, 60), false,
        "families B9, B13; spin(9) < so(16) chain (1/4 * 7/15) and so(9) < su(9) chain "
        "(7/18 * 3/10) agree");
    add("e8.so5", alg(AF::SO, 5), alg(AF::E8), rat(1, 20), false,
        "families B11, B17; so(5) < so(16) chain (3/28 * 7/15) and so(5) < su(5) chain "
        "(3/10 * 1/6) agree");
    add("e8.su3.nonregular", alg(AF::SU, 3), alg(AF::E8), rat(1, 30), false,
        "2su(3) rows A11, B12, B14, B16; su(3) < so(8) chain (1/6 * 1/5) and "
        "su(3) < su(9) chain (1/9 * 3/10) agree");
    add("e8.so3", canonicalized(alg(AF::SO, 3)), alg(AF::E8), rat(1, 60), false,
        "family B18; so(3) < su(3) chain (1/6 * 1/10)");
    return t;
}

}  // namespace

const std::vector<EmbeddingIndexEntry>& embedding_index_table() {
    static const std::vector<EmbeddingIndexEntry> table = build_index_table();
    return table;
}

Rational regular_embedding_index(const AlgebraDescriptor& sub, const AlgebraDescriptor& ambient) {
    const AlgebraDescriptor s = canonicalized(sub);
    for (const auto& e : embedding_index_table())
        if (e.from_regular_formula && e.sub == s && e.ambient == ambient) return e.index;
    throw not_in_catalog_error("no curated regular embedding index for " + sub.name() + " in " +
                               ambient.name());
}

const EmbeddingIndexEntry& embedding_index_by_tag(const std::string& tag) {
    for (const auto& e : embedding_index_table())
        if (e.tag == tag) return e;
    throw not_in_catalog_error("no curated embedding index tagged " + tag);
}

Rational su_block_index(long m, long n) {
    if (m < 2 || n < 2) throw invalid_algebra_error("su block index needs m >= 2, n >= 2");
    return rat(m, n * m);
}

Rational so_block_index(long m, long n) {
    if (m < 3 || n < 2) throw invalid_algebra_error("so block index needs m >= 3, n >= 2");
    return rat(m - 2, n * m - 2);
}

Rational sp_block_index(long m, long n) {
    if (m < 1 || n < 2) throw invalid_algebra_error("sp block index needs m >= 1, n >= 2");
    return rat(m + 1, n * m + 1);
}

std::string serialize_algebra_catalog() {
    std::ostringstream out;
    out << "# einq algebra catalog v1\n";
    out << "# family rank dimension killing_norm\n";
    auto row = [&](AlgebraFamily f, int n) {
        AlgebraDescriptor d = AlgebraDescriptor::make(f, n);
        out << d.name() << " " << (d.rank_param > 0 ? d.rank_param : 0) << " " << dimension(d)
            << " ";
        if (f == AlgebraFamily::SO && n == 3)
            out << format_rational(killing_norm(canonicalized(d))) << " # via su(2)\n";
        else
            out << format_rational(killing_norm(d)) << "\n";
    };
    for (int n = 2; n <= 16; ++n) row(AlgebraFamily::SU, n);
    for (int n = 3; n <= 16; ++n) row(AlgebraFamily::SO, n);
    for (int n = 1; n <= 16; ++n) row(AlgebraFamily::Sp, n);
    row(AlgebraFamily::G2, 0);
    row(AlgebraFamily::F4, 0);
    row(AlgebraFamily::E6, 0);
    row(AlgebraFamily::E7, 0);
    row(AlgebraFamily::E8, 0);
    return out.str();
}

std::string serialize_embedding_indices() {
    std::ostringstream out;
    out << "# einq embedding index table v1\n";
    out << "# tag sub ambient index regular provenance...\n";
    for (const auto& e : embedding_index_table()) {
        out << e.tag << " " << e.sub.name() << " " << e.ambient.name() << " "
            << format_rational(e.index) << " " << (e.from_regular_formula ? "regular" : "curated")
            << " " << e.provenance << "\n";
    }
    return out.str();
}

namespace {

std::vector<std::vector<std::string>> parse_table_lines(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::string> fields;
        std::string f;
        while (ls >> f) fields.push_back(f);
        if (!fields.empty()) rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace

std::vector<std::string> verify_algebra_catalog_text(const std::string& text) {
    std::vector<std::string> problems;
    for (const auto& fields : parse_table_lines(text)) {
        if (fields.size() < 4) {
            problems.push_back("short record");
            continue;
        }
        try {
            AlgebraDescriptor d = AlgebraDescriptor::parse(fields[0]);
            long dim = std::stol(fields[2]);
            Rational norm = parse_rational(fields[3]);
            if (dimension(d) != dim)
                problems.push_back(fields[0] + ": dimension " + fields[2] + " != " +
                                   std::to_string(dimension(d)));
            Rational expect = killing_norm(canonicalized(d));
            if (expect != norm)
                problems.push_back(fields[0] + ": killing_norm " + fields[3] + " != " +
                                   format_rational(expect));
        } catch (const std::exception& e) {
            problems.push_back(fields[0] + ": " + e.what());
        }
    }
    return problems;
}

std::vector<std::string> verify_embedding_indices_text(const std::string& text) {
    std::vector<std::string> problems;
    size_t seen = 0;
    for (const auto& fields : parse_table_lines(text)) {
        if (fields.size() < 5) {
            problems.push_back("short record");
            continue;
        }
        try {
            const EmbeddingIndexEntry& e = embedding_index_by_tag(fields[0]);
            ++seen;
            if (e.sub.name() != fields[1] || e.ambient.name() != fields[2])
                problems.push_back(fields[0] + ": algebras do not match built-in entry");
            if (e.index != parse_rational(fields[3]))
                problems.push_back(fields[0] + ": index " + fields[3] + " != " +
                                   format_rational(e.index));
            if ((fields[4] == "regular") != e.from_regular_formula)
                problems.push_back(fields[0] + ": regular flag mismatch");
        } catch (const std::exception& ex) {
            problems.push_back(fields[0] + ": " + ex.what());
        }
    }
    if (seen != embedding_index_table().size())
        problems.push_back("record count " + std::to_string(seen) + " != " +
                           std::to_string(embedding_index_table().size()));
    return problems;
}

}  // namespace einq
