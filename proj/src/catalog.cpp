#include "fgdyn/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "fgdyn/error.hpp"
#include "fgdyn/expr.hpp"

#ifndef FGDYN_DEFAULT_CATALOG_DIR
#define FGDYN_DEFAULT_CATALOG_DIR "catalogs"
#endif

namespace fgdyn {

namespace {

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
    throw CatalogError(source + ":" + std::to_string(line) + ": " + what);
}

Catalog::Section parse_header(const std::string& header, const std::string& source, int line) {
    static const std::regex finite_re(R"(finite\s+m\s*=\s*(\d+)\s+n\s*=\s*(\d+))");
    static const std::regex general_re(R"((\w+)(?:\s+k\s*=\s*(\S+))?(?:\s+if\s+(.+))?)");
    Catalog::Section s;
    s.line = line;
    std::smatch mt;
    if (std::regex_match(header, mt, finite_re)) {
        s.kind = "finite";
        s.finite_m = std::stoi(mt[1]);
        s.finite_n = std::stoi(mt[2]);
        return s;
    }
    if (!std::regex_match(header, mt, general_re)) fail(source, line, "malformed section header [" + header + "]");
    s.kind = mt[1];
    s.k_range = mt[2];
    s.condition = trim(mt[3]);
    static const std::set<std::string> kinds{"meta", "library", "conjugator", "seed", "core", "tail", "known"};
    if (!kinds.count(s.kind)) fail(source, line, "unknown section kind '" + s.kind + "'");
    if (!s.k_range.empty() && s.kind != "tail" && s.kind != "known") {
        fail(source, line, "k= range only allowed on tail and known sections");
    }
    if (s.kind == "tail" && s.k_range.empty()) fail(source, line, "tail section needs k=<expr>");
    return s;
}

}  // namespace

Catalog Catalog::parse(std::istream& in, const std::string& source) {
    Catalog cat;
    cat.source_ = source;
    std::string raw;
    int line = 0;
    Section* cur = nullptr;
    while (std::getline(in, raw)) {
        ++line;
        if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        std::string text = trim(raw);
        if (text.empty()) continue;
        if (text.front() == '[') {
            if (text.back() != ']') fail(source, line, "unterminated section header");
            cat.sections_.push_back(parse_header(trim(text.substr(1, text.size() - 2)), source, line));
            cur = &cat.sections_.back();
            continue;
        }
        if (!cur) fail(source, line, "entry outside of any section");
        const auto eq = text.find('=');
        if (eq == std::string::npos) fail(source, line, "expected `name = value`");
        std::string key = trim(text.substr(0, eq));
        std::string value = trim(text.substr(eq + 1));
        if (key.empty()) fail(source, line, "empty entry name");
        cur->entries.emplace_back(std::move(key), std::move(value));
    }

    bool have_meta = false;
    for (const Section& s : cat.sections_) {
        if (s.kind == "meta") {
            have_meta = true;
            std::map<std::string, std::string> kv(s.entries.begin(), s.entries.end());
            for (const char* req : {"family", "period", "anchor", "general", "base"}) {
                if (!kv.count(req)) fail(source, s.line, std::string("meta lacks '") + req + "'");
            }
            try {
                cat.family_ = family_from_name(kv["family"]);
            } catch (const ParseError& e) {
                fail(source, s.line, e.what());
            }
            cat.period_ = std::stoi(kv["period"]);
            if (kv["anchor"] == "first") {
                cat.anchor_ = Anchor::FirstA1;
            } else if (kv["anchor"] == "last") {
                cat.anchor_ = Anchor::LastC1;
            } else {
                fail(source, s.line, "anchor must be 'first' or 'last'");
            }
            cat.general_ = kv["general"];
            std::istringstream bs(kv["base"]);
            if (!(bs >> cat.base_.first >> cat.base_.second)) fail(source, s.line, "base must be `m n`");
        } else if (s.kind == "library") {
            for (const auto& [k, v] : s.entries) cat.library_[k] = v;
        }
    }
    if (!have_meta) fail(source, 1, "missing [meta] section");
    if (cat.anchor_ != anchor_of(cat.family_)) fail(source, 1, "anchor disagrees with the family");
    return cat;
}

Catalog Catalog::load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open catalog " + path.string());
    return parse(in, path.filename().string());
}

bool Catalog::is_general(int m, int n) const {
    return eval_condition(general_, ExprEnv{{"m", m}, {"n", n}});
}

bool Catalog::has_finite(int m, int n) const {
    return std::any_of(sections_.begin(), sections_.end(), [&](const Section& s) {
        return s.kind == "finite" && s.finite_m == m && s.finite_n == n;
    });
}

std::vector<std::pair<int, int>> Catalog::finite_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (const Section& s : sections_) {
        if (s.kind == "finite") out.emplace_back(s.finite_m, s.finite_n);
    }
    return out;
}

CatalogInstance Catalog::instantiate(int m, int n) const {
    CatalogInstance inst;
    inst.family = family_;
    inst.m = m;
    inst.n = n;
    inst.period = period_;
    inst.anchor = anchor_;
    inst.general = is_general(m, n);
    inst.source = source_;

    const ExprEnv env{{"m", m}, {"n", n}};
    auto expand = [&](const Section& s, const std::string& value, const ExprEnv& kenv) -> Word {
        std::string text = value;
        if (!text.empty() && text.front() == '@') {
            auto it = library_.find(text.substr(1));
            if (it == library_.end()) fail(source_, s.line, "unknown library template " + text);
            text = it->second;
        }
        try {
            return fgdyn::parse(substitute_placeholders(text, kenv));
        } catch (const ParseError& e) {
            fail(source_, s.line, e.what());
        }
    };
    auto k_values = [&](const Section& s) {
        std::vector<long long> ks;
        if (s.k_range.empty()) {
            ks.push_back(0);
            return ks;
        }
        const auto dots = s.k_range.find("..");
        const long long lo = eval_expr(s.k_range.substr(0, dots), env);
        const long long hi = dots == std::string::npos ? lo : eval_expr(s.k_range.substr(dots + 2), env);
        for (long long k = lo; k <= hi; ++k) ks.push_back(k);
        return ks;
    };

    std::vector<NamedWord> gens;
    std::map<std::string, std::size_t> position;
    bool have_conjugator = false;
    bool have_seed = false;
    const Section* finite = nullptr;
    for (const Section& s : sections_) {
        if (s.kind == "finite") {
            if (s.finite_m == m && s.finite_n == n) finite = &s;
            continue;
        }
        if (s.kind == "meta" || s.kind == "library") continue;
        if (!s.condition.empty() && !eval_condition(s.condition, env)) continue;
        if (s.kind == "conjugator" || s.kind == "seed") {
            if (s.entries.size() != 1) fail(source_, s.line, s.kind + " section needs exactly one entry");
            Word w = expand(s, s.entries.front().second, env);
            if (s.kind == "conjugator") {
                inst.conjugator = w;
                have_conjugator = true;
            } else {
                inst.seed = w;
                have_seed = true;
            }
            continue;
        }
        for (long long k : k_values(s)) {
            ExprEnv kenv = env;
            kenv["k"] = k;
            for (const auto& [name_tpl, value] : s.entries) {
                NamedWord nw{substitute_placeholders(name_tpl, kenv), expand(s, value, kenv)};
                if (s.kind == "known") {
                    inst.known.push_back(std::move(nw));
                } else if (auto it = position.find(nw.name); it != position.end()) {
                    gens[it->second] = std::move(nw);  // a later section redefines the name in place
                } else {
                    position.emplace(nw.name, gens.size());
                    gens.push_back(std::move(nw));
                }
            }
        }
    }
    if (!have_conjugator) throw CatalogError(source_ + ": no conjugator applies to (m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")");
    if (!have_seed) throw CatalogError(source_ + ": no seed applies to (m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")");

    if (inst.general) {
        inst.generators = std::move(gens);
    } else if (finite) {
        for (const auto& [name, value] : finite->entries) inst.generators.push_back({name, expand(*finite, value, env)});
    } else {
        throw CatalogError(source_ + ": (m,n)=(" + std::to_string(m) + "," + std::to_string(n) +
                           ") is uncovered (outside the general region and not listed as finite)");
    }
    if (inst.generators.empty()) throw CatalogError(source_ + ": empty generator list");
    return inst;
}

CatalogSet CatalogSet::load_directory(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw CatalogError("catalog directory not found: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".cat") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    CatalogSet set;
    for (const auto& f : files) {
        Catalog c = Catalog::load_file(f);
        const FamilyKind fam = c.family();
        if (!set.catalogs_.emplace(fam, std::move(c)).second) {
            throw CatalogError("family " + family_name(fam) + " appears in more than one catalog file");
        }
    }
    return set;
}

CatalogSet CatalogSet::load_default() { return load_directory(default_catalog_dir()); }

const Catalog& CatalogSet::for_family(FamilyKind f) const {
    auto it = catalogs_.find(f);
    if (it == catalogs_.end()) throw CatalogError("no catalog for family " + family_name(f));
    return it->second;
}

Catalog& CatalogSet::for_family(FamilyKind f) {
    auto it = catalogs_.find(f);
    if (it == catalogs_.end()) throw CatalogError("no catalog for family " + family_name(f));
    return it->second;
}

CatalogInstance CatalogSet::instantiate(int m, int n) const {
    const FamilyKind f = family_of(m, n);
    CatalogInstance inst = for_family(f).instantiate(m, n);
    if (inst.period != period_k(m, n)) {
        throw CatalogError(inst.source + ": period " + std::to_string(inst.period) + " disagrees with the family's " +
                           std::to_string(period_k(m, n)));
    }
    return inst;
}

std::filesystem::path default_catalog_dir() {
    if (const char* env = std::getenv("FGDYN_CATALOG_DIR"); env && *env) return env;
    return FGDYN_DEFAULT_CATALOG_DIR;
}

}  // namespace fgdyn
