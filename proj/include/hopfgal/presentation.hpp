#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfgal/element.hpp"
#include "hopfgal/linalg.hpp"

namespace hopfgal {

struct NonTerminatingRewrite : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UndeclaredGenerator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Generator {
    std::string name;
    int degree = 1;
};

struct RewriteRule {
    Word lhs;
    Element rhs;
};

struct OverlapIssue {
    Word word;           // ambiguous word
    Element left, right; // the two normal forms that disagree
};

// Row-reduced span of the filtered ideal up to a degree, used to finish
// normal forms when the rewrite rules alone are not confluent there.
// Columns are monomials in descending deg-lex order, so pivots are leading
// monomials and reduced tails are canonical.
struct LinearOracle {
    std::vector<Word> words;    // column -> monomial
    std::map<Word, int> index;  // monomial -> column
    Echelon echelon;
    int degree = 0;
};
using OraclePtr = std::shared_ptr<const LinearOracle>;

// Finitely presented algebra: generators with degrees and a terminating,
// order-compatible reduction system.  Immutable once built; normal-form and
// product caches make repeated sweeps cheap.
class AlgebraPresentation {
public:
    AlgebraPresentation(std::string name, std::vector<Generator> gens);

    const std::string& name() const { return name_; }
    size_t gen_count() const { return gens_.size(); }
    const Generator& gen(GenId i) const { return gens_.at(i); }
    GenId gen_id(const std::string& name) const;
    bool has_gen(const std::string& name) const { return byname_.count(name) != 0; }

    int degree(const Word& w) const;
    // deg-lex over the declared generator order
    bool word_less(const Word& a, const Word& b) const;

    // rule LHS must exceed every RHS word in deg-lex order
    void add_rule(const Word& lhs, const Element& rhs);
    const std::vector<RewriteRule>& rules() const { return rules_; }
    // normalize every rule's right-hand side against the completed set, so
    // equal reduction systems have identical tables
    void finalize_rules();

    void set_linear_oracle(OraclePtr oracle) { oracle_ = std::move(oracle); nf_cache_.clear(); }
    const OraclePtr& linear_oracle() const { return oracle_; }

    void set_star(std::vector<Element> star_images) { star_ = std::move(star_images); }
    bool has_star() const { return star_.has_value(); }

    static constexpr long kDefaultRewriteBudget = 1000000;

    Element normal_form(const Element& e, long budget = kDefaultRewriteBudget) const;
    Element normal_form_word(const Word& w, long budget = kDefaultRewriteBudget) const;
    Element mul(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b, const Element& c) const {
        return mul(mul(a, b), c);
    }
    bool is_normal_word(const Word& w) const;

    std::vector<Word> basis(int max_degree, size_t cap = 200000) const;

    Element star(const Element& e) const;  // anti-multiplicative involution

    // Diamond-lemma diagnostic: resolve all overlap/inclusion ambiguities of
    // rule pairs whose overlap word has degree <= max_degree.
    std::vector<OverlapIssue> check_overlaps(int max_degree) const;

    std::string word_str(const Word& w) const;
    std::string str(const Element& e) const;
    std::string str_tensor(const TensorElement& t,
                           const std::vector<const AlgebraPresentation*>& legs) const;

private:
    std::string name_;
    std::vector<Generator> gens_;
    std::map<std::string, GenId> byname_;
    std::vector<RewriteRule> rules_;
    std::map<Word, size_t> rule_by_lhs_;
    size_t max_lhs_len_ = 0;
    std::optional<std::vector<Element>> star_;
    OraclePtr oracle_;

    mutable std::map<Word, Element> nf_cache_;

    Element oracle_reduce(const Element& e) const;

    // returns rule index and position of the leftmost, lowest-index match
    bool find_redex(const Word& w, size_t& pos, size_t& rule) const;
};

using PresPtr = std::shared_ptr<const AlgebraPresentation>;

}  // namespace hopfgal
