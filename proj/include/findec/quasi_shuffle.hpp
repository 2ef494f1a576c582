#pragma once

#include <string>
#include <vector>

#include "findec/polynomial.hpp"

namespace findec {

/// The four instances of the generic recursive product: one with no letter
/// merge (shuffle) and three whose letters carry a commutative semigroup law
/// (integer addition, componentwise pair addition, monomial multiplication).
enum class QsKind { shuffle, stuffle, diamond, ldiag };

QsKind qs_kind_from_name(const std::string& name);
std::string qs_kind_name(QsKind kind);
bool qs_has_merge(QsKind kind);

/// Empty word of the kind's letter domain.
Element qs_unit(QsKind kind);

/// Word syntax per kind: "x0 x1" (letters), "2,3" (composition),
/// "2/1,3/0" (bicomposition), "[x1^2][x1]" (word of monomials).
Element qs_parse_word(QsKind kind, const std::string& text);

/// Validates that w is a word of the kind's letter domain; throws
/// LetterDomainMismatch otherwise.
void qs_require_word(QsKind kind, const Element& w);

std::size_t qs_length(const Element& w);

/// The word split into single-letter words.
std::vector<Element> qs_letter_words(const Element& w);

Element qs_concat(const Element& a, const Element& b);

/// Merge of two single-letter words into one; undefined for shuffle.
Element qs_merge_letters(QsKind kind, const Element& a, const Element& b);

/// The recursive product: with u = a u', v = b v',
///   u * v = a (u' * v) + b (u * v') [+ (a.b) (u' * v') when the kind merges]
/// and the empty word as two-sided unit. Memoized over suffix pairs.
Polynomial quasi_shuffle(QsKind kind, const Element& u, const Element& v);

/// Bilinear extension to polynomials over words.
Polynomial quasi_shuffle(QsKind kind, const Polynomial& P, const Polynomial& Q);

/// Independent route for tests: enumerates every interleaving of u and v,
/// optionally fusing one letter of each side at a step, and accumulates the
/// produced words directly. No algebraic recursion, no distributivity.
Polynomial qs_interleaving_oracle(QsKind kind, const Element& u, const Element& v);

/// Number of interleaving sequences of a p-letter and a q-letter word:
/// sum over b merged steps of (p+q-b)! / (b! (p-b)! (q-b)!); with no merges
/// this is the binomial (p+q choose p).
unsigned long long qs_tag_string_count(std::size_t p, std::size_t q, bool with_merges);

}  // namespace findec
