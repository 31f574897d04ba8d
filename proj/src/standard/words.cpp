#include "charcat/standard/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "charcat/core/errors.hpp"

namespace charcat::standard {

Word Word::product(std::vector<Word> factors) {
    if (factors.empty()) return one();
    if (factors.size() == 1) return std::move(factors.front());
    return {Op::Mul, {}, std::move(factors)};
}

Word Word::inverse(Word w) { return {Op::Inv, {}, {std::move(w)}}; }

Word Word::commutator(Word a, Word b) {
    return product({inverse(a), inverse(b), a, b});
}

Word Word::power(const Word& w, long long n) {
    if (n == 0) return one();
    const Word base = n < 0 ? inverse(w) : w;
    const long long k = n < 0 ? -n : n;
    return product(std::vector<Word>(static_cast<std::size_t>(k), base));
}

std::vector<std::string> Word::variables() const {
    std::set<std::string> out;
    std::vector<const Word*> stack{this};
    while (!stack.empty()) {
        const Word* w = stack.back();
        stack.pop_back();
        if (w->op == Op::Var) out.insert(w->var);
        for (const auto& a : w->args) stack.push_back(&a);
    }
    return {out.begin(), out.end()};
}

std::string Word::to_string() const {
    switch (op) {
    case Op::One: return "1";
    case Op::Var: return var;
    case Op::Inv: {
        const auto inner = args[0].to_string();
        return (args[0].op == Op::Var ? inner : "(" + inner + ")") + "^-1";
    }
    case Op::Mul: {
        std::string s;
        for (const auto& a : args) s += a.op == Op::Mul ? "(" + a.to_string() + ")" : a.to_string();
        return s;
    }
    }
    return {};
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Word parse() {
        Word w = word();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidInput("word '" + s_ + "' at " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool at_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return std::isalpha(static_cast<unsigned char>(c)) || c == '1' || c == '(' || c == '[';
    }

    Word word() {
        std::vector<Word> fs;
        while (at_factor()) fs.push_back(factor());
        if (fs.empty()) fail("expected a factor");
        return Word::product(std::move(fs));
    }

    Word factor() {
        Word a = atom();
        while (peek('^')) {
            ++pos_;
            skip();
            bool neg = false;
            if (pos_ < s_.size() && s_[pos_] == '-') {
                neg = true;
                ++pos_;
            }
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected an exponent");
            const long long n = std::stoll(s_.substr(start, pos_ - start));
            if (n > 1000) fail("exponent too large");
            a = Word::power(a, neg ? -n : n);
        }
        return a;
    }

    Word atom() {
        skip();
        const char c = s_[pos_];
        if (c == '1') {
            ++pos_;
            return Word::one();
        }
        if (c == '(') {
            ++pos_;
            Word w = word();
            expect(')');
            return w;
        }
        if (c == '[') {
            ++pos_;
            Word acc = word();
            std::size_t parts = 1;
            while (peek(',')) {
                ++pos_;
                acc = Word::commutator(std::move(acc), word());
                ++parts;
            }
            if (parts < 2) fail("a commutator needs at least two entries");
            expect(']');
            return acc;
        }
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        return Word::variable(s_.substr(start, pos_ - start));
    }

    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace

Word parse_word(const std::string& text) { return Parser(text).parse(); }

Elem eval_word(const Word& w, const groups::FiniteGroup& g, const Assignment& a) {
    switch (w.op) {
    case Word::Op::One: return g.identity();
    case Word::Op::Var: {
        auto it = a.find(w.var);
        if (it == a.end()) throw InvalidInput("unbound variable '" + w.var + "'");
        if (it->second >= g.order()) throw InvalidInput("variable '" + w.var + "' is not an element of " + g.id());
        return it->second;
    }
    case Word::Op::Inv: return g.inv(eval_word(w.args[0], g, a));
    case Word::Op::Mul: {
        Elem acc = g.identity();
        for (const auto& f : w.args) acc = g.mul(acc, eval_word(f, g, a));
        return acc;
    }
    }
    return g.identity();
}

CompiledWord::CompiledWord(const Word& w) : vars_(w.variables()) {
    // Post-order flattening; each step writes one slot.
    auto emit = [&](auto&& self, const Word& node) -> std::size_t {
        Step s{node.op, 0, {}};
        if (node.op == Word::Op::Var)
            s.a = static_cast<std::size_t>(std::lower_bound(vars_.begin(), vars_.end(), node.var) - vars_.begin());
        for (const auto& child : node.args) s.operands.push_back(self(self, child));
        steps_.push_back(std::move(s));
        return steps_.size() - 1;
    };
    emit(emit, w);
}

Elem CompiledWord::operator()(const groups::FiniteGroup& g, const std::vector<Elem>& tuple) const {
    std::vector<Elem> slot(steps_.size());
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        const Step& s = steps_[i];
        switch (s.op) {
        case Word::Op::One: slot[i] = g.identity(); break;
        case Word::Op::Var: slot[i] = tuple[s.a]; break;
        case Word::Op::Inv: slot[i] = g.inv(slot[s.operands[0]]); break;
        case Word::Op::Mul: {
            Elem acc = g.identity();
            for (std::size_t o : s.operands) acc = g.mul(acc, slot[o]);
            slot[i] = acc;
            break;
        }
        }
    }
    return slot.back();
}

} // namespace charcat::standard
