#include "commgraph/notation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace commgraph {

  namespace {

    class Scanner {
     public:
      explicit Scanner(std::string_view text) : text_(text) {}

      void skip_space() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      bool at_end() {
        skip_space();
        return pos_ >= text_.size();
      }

      char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
      }

      std::size_t position() const {
        return pos_;
      }

      void expect(char c) {
        if (peek() != c) {
          throw ParseError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
      }

      bool accept(std::string_view token) {
        skip_space();
        if (text_.substr(pos_, token.size()) == token) {
          pos_ += token.size();
          return true;
        }
        return false;
      }

      // A positive decimal label.
      std::size_t label() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size()
               && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
        if (start == pos_) {
          throw ParseError("expected a label", start);
        }
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start,
                                         text_.data() + pos_, value);
        if (ec != std::errc() || value == 0 || value > kMaxPoints) {
          throw ParseError("label out of range [1, "
                               + std::to_string(kMaxPoints) + "]",
                           start);
        }
        return value;
      }

     private:
      std::string_view text_;
      std::size_t      pos_ = 0;
    };

    std::size_t resolve_degree(std::optional<std::size_t> n,
                               std::size_t               max_label) {
      std::size_t degree = n.value_or(max_label);
      if (degree == 0 || degree > kMaxPoints) {
        throw OutOfRange("ground-set size " + std::to_string(degree)
                         + " out of range");
      }
      return degree;
    }

    // Assigns label -> image (both 1-based), rejecting a second image.
    void assign(std::vector<std::size_t>& images,
                std::size_t               from,
                std::size_t               to,
                std::size_t               position) {
      if (images.size() < from) {
        images.resize(from, 0);
      }
      if (images[from - 1] != 0 && images[from - 1] != to) {
        throw ParseError("label " + std::to_string(from)
                             + " is given two images",
                         position);
      }
      if (images[from - 1] == to) {
        throw ParseError("label " + std::to_string(from)
                             + " is given an image twice",
                         position);
      }
      images[from - 1] = to;
    }

  }  // namespace

  PTrans parse_tabular(std::string_view text, std::optional<std::size_t> n) {
    std::vector<Point>       images;
    std::vector<std::size_t> positions;
    std::vector<std::size_t> labels;
    Scanner                  in(text);
    while (!in.at_end()) {
      positions.push_back(in.position());
      if (in.accept("-")) {
        labels.push_back(0);
      } else {
        labels.push_back(in.label());
      }
    }
    if (labels.empty()) {
      throw ParseError("empty tabular expression", 0);
    }
    std::size_t degree = labels.size();
    if (n && *n != degree) {
      throw ParseError("expected " + std::to_string(*n) + " images, got "
                           + std::to_string(degree),
                       text.size());
    }
    if (degree > kMaxPoints) {
      throw ParseError("too many images", positions[kMaxPoints]);
    }
    for (std::size_t i = 0; i < degree; ++i) {
      if (labels[i] > degree) {
        throw ParseError("label out of range for ground set of size "
                             + std::to_string(degree),
                         positions[i]);
      }
      images.push_back(labels[i] == 0 ? kUndef
                                      : static_cast<Point>(labels[i] - 1));
    }
    return PTrans::from_images(std::span<Point const>(images));
  }

  ChainCycleExpr read_chain_cycle(std::string_view text) {
    ChainCycleExpr expr;
    Scanner        in(text);
    if (in.at_end()) {
      throw ParseError("empty chain/cycle expression", 0);
    }
    while (!in.at_end()) {
      char        open  = in.peek();
      std::size_t start = in.position();
      char        close;
      if (open == '[') {
        close = ']';
      } else if (open == '(') {
        close = ')';
      } else {
        throw ParseError("expected '[' or '('", start);
      }
      in.expect(open);
      std::vector<std::size_t> seq;
      while (in.peek() != close) {
        if (in.at_end()) {
          throw ParseError(std::string("unterminated segment, expected '")
                               + close + "'",
                           in.position());
        }
        seq.push_back(in.label());
      }
      in.expect(close);
      if (seq.empty()) {
        throw ParseError("empty segment", start);
      }
      if (open == '[') {
        if (seq.size() < 2) {
          throw ParseError("a chain needs at least two labels", start);
        }
        expr.chains.push_back(std::move(seq));
        expr.chain_offsets.push_back(start);
      } else {
        expr.cycles.push_back(std::move(seq));
        expr.cycle_offsets.push_back(start);
      }
    }
    return expr;
  }

  PTrans realize(ChainCycleExpr const& expr, std::size_t n) {
    auto offset = [](std::vector<std::size_t> const& v, std::size_t i) {
      return i < v.size() ? v[i] : 0;
    };
    std::vector<std::size_t> images(n, 0);
    for (std::size_t s = 0; s < expr.chains.size(); ++s) {
      auto const& chain = expr.chains[s];
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (chain[i] > n || chain[i + 1] > n) {
          throw ParseError("chain label exceeds ground-set size "
                               + std::to_string(n),
                           offset(expr.chain_offsets, s));
        }
        assign(images, chain[i], chain[i + 1], offset(expr.chain_offsets, s));
      }
    }
    for (std::size_t s = 0; s < expr.cycles.size(); ++s) {
      auto const& cycle = expr.cycles[s];
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        std::size_t next = cycle[(i + 1) % cycle.size()];
        if (cycle[i] > n || next > n) {
          throw ParseError("cycle label exceeds ground-set size "
                               + std::to_string(n),
                           offset(expr.cycle_offsets, s));
        }
        assign(images, cycle[i], next, offset(expr.cycle_offsets, s));
      }
    }
    for (std::size_t s = 0; s < expr.chains.size(); ++s) {
      auto const& chain = expr.chains[s];
      if (images[chain.back() - 1] == 0) {
        throw ParseError("chain attachment point "
                             + std::to_string(chain.back())
                             + " never receives an image",
                         offset(expr.chain_offsets, s));
      }
    }
    PTrans t(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (images[x] != 0) {
        t.set_unchecked(x, static_cast<Point>(images[x] - 1));
      }
    }
    return t;
  }

  PTrans parse_chain_cycle(std::string_view text,
                           std::optional<std::size_t> n) {
    ChainCycleExpr expr      = read_chain_cycle(text);
    std::size_t    max_label = 0;
    for (auto const* group : {&expr.chains, &expr.cycles}) {
      for (auto const& seq : *group) {
        max_label = std::max(max_label, *std::max_element(seq.begin(), seq.end()));
      }
    }
    return realize(expr, resolve_degree(n, max_label));
  }

  IdempotentExpr read_idempotent(std::string_view text) {
    IdempotentExpr expr;
    Scanner        in(text);
    if (in.at_end()) {
      throw ParseError("empty idempotent expression", 0);
    }
    while (!in.at_end()) {
      std::size_t start = in.position();
      in.expect('{');
      IdempotentBlock block;
      while (!in.accept("->")) {
        if (in.at_end() || in.peek() == '}') {
          throw ParseError("expected '->' in block", in.position());
        }
        block.labels.push_back(in.label());
      }
      if (block.labels.empty()) {
        throw ParseError("block has no labels", start);
      }
      std::size_t rep_pos  = in.position();
      block.representative = in.label();
      in.expect('}');
      if (std::find(block.labels.begin(), block.labels.end(),
                    block.representative)
          == block.labels.end()) {
        throw ParseError("representative "
                             + std::to_string(block.representative)
                             + " is not in its block",
                         rep_pos);
      }
      for (auto const& earlier : expr.blocks) {
        for (auto l : block.labels) {
          if (std::find(earlier.labels.begin(), earlier.labels.end(), l)
              != earlier.labels.end()) {
            throw ParseError("label " + std::to_string(l)
                                 + " appears in two blocks",
                             start);
          }
        }
      }
      auto sorted = block.labels;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ParseError("repeated label in block", start);
      }
      expr.blocks.push_back(std::move(block));
      expr.block_offsets.push_back(start);
    }
    return expr;
  }

  PTrans realize(IdempotentExpr const& expr, std::size_t n) {
    PTrans t(n);
    for (std::size_t b = 0; b < expr.blocks.size(); ++b) {
      auto const& block = expr.blocks[b];
      for (auto l : block.labels) {
        if (l > n) {
          throw ParseError("idempotent label exceeds ground-set size "
                               + std::to_string(n),
                           b < expr.block_offsets.size() ? expr.block_offsets[b]
                                                         : 0);
        }
        t.set_unchecked(l - 1, static_cast<Point>(block.representative - 1));
      }
    }
    return t;
  }

  PTrans parse_idempotent(std::string_view text,
                          std::optional<std::size_t> n) {
    IdempotentExpr expr      = read_idempotent(text);
    std::size_t    max_label = 0;
    for (auto const& block : expr.blocks) {
      max_label = std::max(
          max_label, *std::max_element(block.labels.begin(), block.labels.end()));
    }
    return realize(expr, resolve_degree(n, max_label));
  }

  PTrans parse_element(std::string_view text, std::optional<std::size_t> n) {
    std::size_t exponent = 1;
    auto        caret    = text.rfind('^');
    if (caret != std::string_view::npos) {
      auto    digits = text.substr(caret + 1);
      while (!digits.empty() && std::isspace(static_cast<unsigned char>(digits.front()))) {
        digits.remove_prefix(1);
      }
      while (!digits.empty() && std::isspace(static_cast<unsigned char>(digits.back()))) {
        digits.remove_suffix(1);
      }
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(),
                                       exponent);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()
          || exponent == 0) {
        throw ParseError("power suffix must be a positive integer", caret + 1);
      }
      text = text.substr(0, caret);
    }
    Scanner in(text);
    char    first = in.peek();
    PTrans  base(1);
    if (first == '[' || first == '(') {
      base = parse_chain_cycle(text, n);
    } else if (first == '{') {
      base = parse_idempotent(text, n);
    } else {
      base = parse_tabular(text, n);
    }
    return exponent == 1 ? base : power(base, exponent);
  }

  std::string format_tabular(PTrans const& t) {
    std::ostringstream out;
    for (std::size_t x = 0; x < t.degree(); ++x) {
      if (x > 0) {
        out << ' ';
      }
      if (t.defined_at(x)) {
        out << static_cast<unsigned>(t[x]) + 1;
      } else {
        out << '-';
      }
    }
    return out.str();
  }

  std::string format_cycles(PTrans const& t) {
    std::ostringstream out;
    for (auto const& cycle : cycle_decomposition(t)) {
      out << '(';
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        out << (i > 0 ? " " : "") << static_cast<unsigned>(cycle[i]) + 1;
      }
      out << ')';
    }
    return out.str();
  }

  std::string format_idempotent(PTrans const& t) {
    if (!is_full(t) || !is_idempotent(t)) {
      throw PreconditionError("idempotent notation needs a full idempotent");
    }
    std::ostringstream out;
    for (auto rep : im(t).to_vector()) {
      out << '{';
      for (auto x : preimage(t, rep).to_vector()) {
        out << x + 1 << ' ';
      }
      out << "-> " << rep + 1 << '}';
    }
    return out.str();
  }

}  // namespace commgraph
