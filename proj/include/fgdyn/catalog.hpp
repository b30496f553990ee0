#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgdyn/family.hpp"
#include "fgdyn/word.hpp"

namespace fgdyn {

struct NamedWord {
    std::string name;
    Word word;
};

// Generator data of one family for one parameter pair, after template expansion.
struct CatalogInstance {
    FamilyKind family = FamilyKind::F11n;
    int m = 0;
    int n = 0;
    int period = 0;
    Anchor anchor = Anchor::FirstA1;
    bool general = false;  // true: core/tail formulas; false: explicit finite-range list
    std::vector<NamedWord> generators;
    Word seed;
    Word conjugator;
    std::vector<NamedWord> known;  // printed words that must lie in the semigroup
    std::string source;
};

// One catalog file. Sections:
//   [meta]                      family, period, anchor (first|last), general (condition), base (m n)
//   [library]                   named templates, referenced from entries as `@name`
//   [conjugator (if C)]         delta = <word>     (the last matching section wins)
//   [seed (if C)]               seed = <word>      (the last matching section wins)
//   [core (if C)]               name = <word>
//   [tail k=LO(..HI) (if C)]    name{k} = <word with {k}, {k+1}, {m}, ... placeholders>
//   [known (k=...) (if C)]      printed members, not generators
//   [finite m=M n=N]            explicit generator list for one pair outside the general region
class Catalog {
public:
    struct Section {
        std::string kind;
        std::string k_range;    // empty when absent
        std::string condition;  // empty when absent
        int finite_m = 0;
        int finite_n = 0;
        std::vector<std::pair<std::string, std::string>> entries;
        int line = 0;
    };

    static Catalog parse(std::istream& in, const std::string& source);
    static Catalog load_file(const std::filesystem::path& path);

    FamilyKind family() const { return family_; }
    int period() const { return period_; }
    Anchor anchor() const { return anchor_; }
    const std::string& general_condition() const { return general_; }
    std::pair<int, int> base() const { return base_; }
    const std::string& source() const { return source_; }

    bool is_general(int m, int n) const;
    bool has_finite(int m, int n) const;
    bool covers(int m, int n) const { return is_general(m, n) || has_finite(m, n); }
    std::vector<std::pair<int, int>> finite_pairs() const;

    // Throws CatalogError when (m,n) is neither in the general region nor listed as finite.
    CatalogInstance instantiate(int m, int n) const;

    // Fault injection and editing support.
    std::vector<Section>& sections() { return sections_; }
    const std::vector<Section>& sections() const { return sections_; }

private:
    std::string source_;
    FamilyKind family_ = FamilyKind::F11n;
    int period_ = 0;
    Anchor anchor_ = Anchor::FirstA1;
    std::string general_;
    std::pair<int, int> base_{0, 0};
    std::map<std::string, std::string> library_;
    std::vector<Section> sections_;
};

class CatalogSet {
public:
    // Loads every *.cat file in `dir`. Each family may appear only once.
    static CatalogSet load_directory(const std::filesystem::path& dir);
    static CatalogSet load_default();

    const Catalog& for_family(FamilyKind f) const;
    Catalog& for_family(FamilyKind f);
    bool has_family(FamilyKind f) const { return catalogs_.count(f) != 0; }

    // Throws RangeError outside every family, CatalogError when the catalog does not cover (m,n).
    CatalogInstance instantiate(int m, int n) const;

private:
    std::map<FamilyKind, Catalog> catalogs_;
};

// $FGDYN_CATALOG_DIR when set, else the catalogs/ directory of the source tree.
std::filesystem::path default_catalog_dir();

}  // namespace fgdyn
