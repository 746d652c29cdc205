#include "chev/chevalley.hpp"

#include <stdexcept>

namespace chev {

Letter Letter::inverse() const {
  switch (kind) {
    case Kind::X: return {Kind::X, root, -scalar};
    case Kind::M: return {Kind::M, root, -scalar};  // m_α(λ)⁻¹ = m_α(-λ)
    default: return {Kind::H, root, 1 / scalar};
  }
}

std::string Letter::to_string(const RootSystem& rs) const {
  const char* sym = kind == Kind::X ? "x" : kind == Kind::M ? "m" : "h";
  return std::string(sym) + "[" + rs.name(root) + "](" + scalar.get_str() + ")";
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  std::optional<GroupWord> word;
  if (a.word_ && b.word_) {
    word = *a.word_;
    word->insert(word->end(), b.word_->begin(), b.word_->end());
  }
  return GroupElement(a.matrix_ * b.matrix_, std::move(word));
}

GroupElement GroupElement::inverse() const {
  auto inv = matrix_.inverse();
  if (!inv) throw std::domain_error("group element matrix is singular");
  std::optional<GroupWord> word;
  if (word_) {
    word.emplace();
    for (auto it = word_->rbegin(); it != word_->rend(); ++it) word->push_back(it->inverse());
  }
  return GroupElement(std::move(*inv), std::move(word));
}

GroupElement GroupElement::pow(unsigned long k) const {
  std::optional<GroupWord> word;
  if (word_) {
    word.emplace();
    for (unsigned long i = 0; i < k; ++i) word->insert(word->end(), word_->begin(), word_->end());
  }
  return GroupElement(matrix_.pow(k), std::move(word));
}

}  // namespace chev
