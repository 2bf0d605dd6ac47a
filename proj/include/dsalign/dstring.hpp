#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dsalign {

/*
 * A degenerate string ("D-string") is a sequence of degenerate letters.
 * Each letter holds one or more variant strings of a common length ell;
 * a letter with a single one-character variant is an ordinary solid
 * position. The bracket text format looks like
 *
 *     GCA[AT/CG]C[G/T]GG[TA/AA/AT]TT
 *
 * where bare characters are solid letters and [v1/v2/...] encloses the
 * variants of one degenerate letter.
 */

/// Default nucleotide alphabet accepted by the parser.
inline const std::string kDnaAlphabet = "ACGT";

/// Thrown on malformed D-string text. `offset` is the byte offset of the
/// problem in the input.
struct ParseError : std::runtime_error {
    ParseError(std::string msg, std::size_t offset)
        : std::runtime_error(msg + " at byte " + std::to_string(offset)), offset(offset) {}
    std::size_t offset;
};

/// One position of a D-string: a set of equal-length variant strings.
struct DegenerateLetter {
    std::vector<std::string> variants;

    /// Common variant length (ell).
    std::size_t ell() const { return variants.front().size(); }
    /// Number of variants (s).
    std::size_t s() const { return variants.size(); }
    /// True for an ordinary single-character position.
    bool solid() const { return variants.size() == 1 && variants.front().size() == 1; }

    bool operator==(const DegenerateLetter&) const = default;
};

/// The character tuple readable at one width position: the col-th character
/// of every variant of the enclosing letter, in variant order.
struct WidthColumn {
    std::size_t letter_id;
    std::size_t col;
    std::string chars;  // chars[h] = variant h at this column

    std::size_t s() const { return chars.size(); }
};

/// Count of member strings, which may overflow any fixed-width integer for
/// large D-strings. `exact` is false when the product of variant counts
/// exceeded the 64-bit range; `value` is then meaningless.
struct MemberCount {
    std::uint64_t value = 1;
    bool exact = true;
};

class DString {
public:
    DString() = default;

    /// Build from letters; validates variant shape and precomputes the
    /// width index.
    explicit DString(std::vector<DegenerateLetter> letters) : letters_(std::move(letters)) {
        build_index();
    }

    const std::vector<DegenerateLetter>& letters() const { return letters_; }
    const DegenerateLetter& letter(std::size_t id) const { return letters_[id]; }

    /// Number of degenerate letters (n).
    std::size_t length() const { return letters_.size(); }
    /// Total width W = sum of ell over letters; the length of every member.
    std::size_t width() const { return width_; }
    /// Total size N = sum of s*ell over letters.
    std::size_t size() const { return size_; }

    /// Letter id covering width position u.
    std::size_t letter_at(std::size_t u) const { return index_[u].first; }
    /// Column within its letter of width position u.
    std::size_t col_at(std::size_t u) const { return index_[u].second; }
    /// First width position of letter `id`.
    std::size_t letter_start(std::size_t id) const { return starts_[id]; }
    /// One past the last width position of letter `id`.
    std::size_t letter_end(std::size_t id) const { return starts_[id] + letters_[id].ell(); }

    /// The character tuple at width position u (0-based).
    WidthColumn column(std::size_t u) const {
        if (u >= width_) {
            throw std::out_of_range("width index " + std::to_string(u) + " >= W=" +
                                    std::to_string(width_));
        }
        auto [id, col] = index_[u];
        WidthColumn wc;
        wc.letter_id = id;
        wc.col = col;
        wc.chars.reserve(letters_[id].s());
        for (const auto& v : letters_[id].variants) {
            wc.chars.push_back(v[col]);
        }
        return wc;
    }

    /// D-substring spanning width positions u1..u2 inclusive (0-based).
    /// The cut may not split a degenerate letter.
    DString dsubstring(std::size_t u1, std::size_t u2) const {
        if (u1 > u2 || u2 >= width_) {
            throw std::out_of_range("bad width range [" + std::to_string(u1) + ", " +
                                    std::to_string(u2) + "]");
        }
        if (col_at(u1) != 0) {
            throw std::invalid_argument("substring start at width " + std::to_string(u1) +
                                        " splits a degenerate letter");
        }
        if (u2 + 1 != letter_end(letter_at(u2))) {
            throw std::invalid_argument("substring end at width " + std::to_string(u2) +
                                        " splits a degenerate letter");
        }
        std::vector<DegenerateLetter> piece(letters_.begin() + letter_at(u1),
                                            letters_.begin() + letter_at(u2) + 1);
        return DString(std::move(piece));
    }

    /// Number of member strings: the product of variant counts.
    MemberCount member_count() const {
        MemberCount mc;
        for (const auto& l : letters_) {
            if (mc.value > UINT64_MAX / l.s()) {
                mc.exact = false;
                mc.value = UINT64_MAX;
                return mc;
            }
            mc.value *= l.s();
        }
        return mc;
    }

    /// True iff t is one of the member strings: |t| == W and every letter's
    /// slice of t equals one of its variants.
    bool contains(std::string_view t) const {
        if (t.size() != width_) return false;
        std::size_t u = 0;
        for (const auto& l : letters_) {
            std::string_view slice = t.substr(u, l.ell());
            bool hit = false;
            for (const auto& v : l.variants) {
                if (slice == v) {
                    hit = true;
                    break;
                }
            }
            if (!hit) return false;
            u += l.ell();
        }
        return true;
    }

    bool operator==(const DString& o) const { return letters_ == o.letters_; }

private:
    void build_index() {
        if (letters_.empty()) {
            throw std::invalid_argument("D-string must have at least one letter");
        }
        width_ = 0;
        size_ = 0;
        starts_.clear();
        index_.clear();
        for (std::size_t id = 0; id < letters_.size(); ++id) {
            const auto& l = letters_[id];
            if (l.variants.empty()) throw std::invalid_argument("degenerate letter with no variants");
            const std::size_t ell = l.variants.front().size();
            if (ell == 0) throw std::invalid_argument("empty variant");
            for (const auto& v : l.variants) {
                if (v.size() != ell) throw std::invalid_argument("unequal variant lengths");
            }
            starts_.push_back(width_);
            for (std::size_t c = 0; c < ell; ++c) {
                index_.emplace_back(id, c);
            }
            width_ += ell;
            size_ += l.s() * ell;
        }
    }

    std::vector<DegenerateLetter> letters_;
    std::size_t width_ = 0;
    std::size_t size_ = 0;
    std::vector<std::size_t> starts_;                        // letter id -> first width
    std::vector<std::pair<std::size_t, std::size_t>> index_; // width -> (letter id, col)
};

/// Parse bracket notation. `alphabet` lists the characters allowed outside
/// of the reserved '[', ']', '/'. A single trailing newline is ignored.
inline DString parse_dstring(std::string_view text, std::string_view alphabet = kDnaAlphabet) {
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty input", 0);

    auto in_alphabet = [&](char c) { return alphabet.find(c) != std::string_view::npos; };

    std::vector<DegenerateLetter> letters;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '[') {
            const std::size_t open = i;
            ++i;
            std::vector<std::string> variants;
            std::string cur;
            bool closed = false;
            for (; i < text.size(); ++i) {
                const char b = text[i];
                if (b == ']') {
                    variants.push_back(cur);
                    closed = true;
                    ++i;
                    break;
                }
                if (b == '/') {
                    variants.push_back(cur);
                    cur.clear();
                    continue;
                }
                if (b == '[') throw ParseError("nested '['", i);
                if (!in_alphabet(b)) throw ParseError(std::string("character '") + b + "' outside alphabet", i);
                cur.push_back(b);
            }
            if (!closed) throw ParseError("unbalanced '['", open);
            for (std::size_t v = 0, pos = open; v < variants.size(); ++v) {
                if (variants[v].empty()) throw ParseError("empty variant", pos + 1);
                pos += variants[v].size() + 1;
            }
            for (const auto& v : variants) {
                if (v.size() != variants.front().size()) {
                    throw ParseError("unequal variant lengths in bracket", open);
                }
            }
            for (std::size_t a = 0; a < variants.size(); ++a) {
                for (std::size_t b = a + 1; b < variants.size(); ++b) {
                    if (variants[a] == variants[b]) throw ParseError("duplicate variant", open);
                }
            }
            letters.push_back(DegenerateLetter{std::move(variants)});
        } else if (c == ']') {
            throw ParseError("unbalanced ']'", i);
        } else if (c == '/') {
            throw ParseError("'/' outside brackets", i);
        } else if (!in_alphabet(c)) {
            throw ParseError(std::string("character '") + c + "' outside alphabet", i);
        } else {
            // consecutive solid characters become distinct solid letters
            letters.push_back(DegenerateLetter{{std::string(1, c)}});
            ++i;
        }
    }
    return DString(std::move(letters));
}

/// Emit bracket notation; inverse of parse_dstring.
inline std::string format_dstring(const DString& ds) {
    std::string out;
    for (const auto& l : ds.letters()) {
        if (l.s() == 1) {
            out += l.variants.front();
            continue;
        }
        out.push_back('[');
        for (std::size_t v = 0; v < l.s(); ++v) {
            if (v) out.push_back('/');
            out += l.variants[v];
        }
        out.push_back(']');
    }
    return out;
}

/*
 * Lexicographic enumeration of member strings by variant index: the choice
 * for the last letter varies fastest. Yields at most `cap` members.
 */
class MemberRange {
public:
    MemberRange(const DString& ds, std::uint64_t cap) : ds_(&ds), cap_(cap) {}

    class iterator {
    public:
        iterator() = default;
        iterator(const DString* ds, std::uint64_t remaining)
            : ds_(ds), choice_(ds->length(), 0), remaining_(remaining) {
            if (remaining_ > 0) materialize();
        }

        const std::string& operator*() const { return current_; }

        iterator& operator++() {
            if (remaining_ > 0) --remaining_;
            if (remaining_ == 0) return *this;
            // odometer step, rightmost letter fastest
            std::size_t i = choice_.size();
            while (i > 0) {
                --i;
                if (++choice_[i] < ds_->letter(i).s()) break;
                choice_[i] = 0;
                if (i == 0) {
                    remaining_ = 0;  // wrapped past the last member
                    return *this;
                }
            }
            materialize();
            return *this;
        }

        bool operator!=(const iterator& o) const { return remaining_ != o.remaining_; }

    private:
        void materialize() {
            current_.clear();
            current_.reserve(ds_->width());
            for (std::size_t i = 0; i < choice_.size(); ++i) {
                current_ += ds_->letter(i).variants[choice_[i]];
            }
        }

        const DString* ds_ = nullptr;
        std::vector<std::size_t> choice_;
        std::string current_;
        std::uint64_t remaining_ = 0;
    };

    iterator begin() const {
        MemberCount mc = ds_->member_count();
        std::uint64_t n = mc.exact ? std::min(mc.value, cap_) : cap_;
        return iterator(ds_, n);
    }
    iterator end() const { return iterator(); }

private:
    const DString* ds_;
    std::uint64_t cap_;
};

/// Enumerate member strings in deterministic order, stopping after `cap`.
/// The D-string must outlive the returned range.
inline MemberRange members(const DString& ds, std::uint64_t cap) { return MemberRange(ds, cap); }
MemberRange members(DString&& ds, std::uint64_t cap) = delete;

}  // namespace dsalign
