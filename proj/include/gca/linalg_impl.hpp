#pragma once

namespace gca {

template <typename Next>
std::optional<QVector> first_linear_relation(Next next, std::size_t max_terms) {
  std::vector<QVector> seq;
  for (std::size_t k = 0; k < max_terms; ++k) {
    QVector v = next();
    if (!seq.empty()) {
      if (auto c = coordinates_in(seq, v)) {
        QVector rel(seq.size() + 1, Rational(0));
        for (std::size_t i = 0; i < seq.size(); ++i) rel[i] = -(*c)[i];
        rel[seq.size()] = 1;
        return rel;
      }
    } else if (is_zero_vector(v)) {
      return QVector{Rational(1)};
    }
    seq.push_back(std::move(v));
  }
  return std::nullopt;
}

}  // namespace gca
