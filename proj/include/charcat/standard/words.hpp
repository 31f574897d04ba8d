#pragma once

#include <map>
#include <string>
#include <vector>

#include "charcat/groups/group.hpp"

namespace charcat::standard {

using groups::Elem;

/// A group word: the identity, a variable, a product of factors or an inverse.
struct Word {
    enum class Op { One, Var, Mul, Inv };
    Op op = Op::One;
    std::string var;
    std::vector<Word> args;

    static Word one() { return {}; }
    static Word variable(std::string name) { return {Op::Var, std::move(name), {}}; }
    static Word product(std::vector<Word> factors);
    static Word inverse(Word w);
    /// [a,b] = a^-1 b^-1 a b.
    static Word commutator(Word a, Word b);
    static Word power(const Word& w, long long n);

    /// Distinct variable names in sorted order.
    std::vector<std::string> variables() const;
    std::string to_string() const;
};

/// Grammar: juxtaposition for products, `x^-1` and `x^n` for powers, `1` for the identity,
/// parentheses, and `[a,b,...]` for left-normed commutators. Variables are a letter followed
/// by letters, digits or underscores. Throws InvalidInput on malformed text.
Word parse_word(const std::string& text);

using Assignment = std::map<std::string, Elem>;

/// Value of the word under the assignment; InvalidInput on an unbound variable.
Elem eval_word(const Word& w, const groups::FiniteGroup& g, const Assignment& a);

/// A word compiled against its sorted variable list for repeated evaluation on tuples.
class CompiledWord {
public:
    explicit CompiledWord(const Word& w);
    std::size_t arity() const { return vars_.size(); }
    const std::vector<std::string>& variables() const { return vars_; }
    Elem operator()(const groups::FiniteGroup& g, const std::vector<Elem>& tuple) const;

private:
    struct Step {
        Word::Op op;
        std::size_t a = 0;  // variable index, or operand slot
        std::vector<std::size_t> operands;
    };
    std::vector<std::string> vars_;
    std::vector<Step> steps_;  // postfix program; the last slot is the value
};

} // namespace charcat::standard
