#include "ordspace/hom.hpp"

#include <stdexcept>

namespace ordspace {

GroupHom GroupHom::to_free(std::int32_t source_rank, std::vector<Word> images) {
  if (static_cast<std::int32_t>(images.size()) != source_rank) {
    throw std::invalid_argument("one image per source generator required");
  }
  GroupHom h;
  h.source_rank_ = source_rank;
  h.images_ = std::move(images);
  return h;
}

GroupHom GroupHom::to_free_abelian(std::int32_t source_rank, std::vector<ZVector> images) {
  if (static_cast<std::int32_t>(images.size()) != source_rank) {
    throw std::invalid_argument("one image per source generator required");
  }
  if (!images.empty()) {
    std::size_t k = images.front().size();
    for (const auto& v : images) {
      if (v.size() != k) throw std::invalid_argument("abelian images must share a rank");
    }
  }
  GroupHom h;
  h.source_rank_ = source_rank;
  h.images_ = std::move(images);
  return h;
}

Word GroupHom::apply_free(const Word& u) const {
  const auto& imgs = std::get<std::vector<Word>>(images_);
  Word out;
  for (const Letter& l : u.letters()) {
    if (l.id < 1 || l.id > source_rank_) {
      throw std::invalid_argument("word not over the source alphabet");
    }
    const Word& im = imgs[static_cast<std::size_t>(l.id - 1)];
    out = out * (l.exp > 0 ? im : im.inverse());
  }
  return out;
}

ZVector GroupHom::apply_abelian(const Word& u) const {
  const auto& imgs = std::get<std::vector<ZVector>>(images_);
  std::size_t k = imgs.empty() ? 0 : imgs.front().size();
  ZVector out(k, 0);
  for (const Letter& l : u.letters()) {
    if (l.id < 1 || l.id > source_rank_) {
      throw std::invalid_argument("word not over the source alphabet");
    }
    const ZVector& im = imgs[static_cast<std::size_t>(l.id - 1)];
    for (std::size_t i = 0; i < k; ++i) out[i] += l.exp * im[i];
  }
  return out;
}

std::int64_t a_exponent(const Word& u) {
  std::int64_t s = 0;
  for (const Letter& l : u.letters()) {
    if (l.id == 1) s += l.exp;
  }
  return s;
}

Word rs_rewrite(const Word& u) {
  if (!u.ids_in_range(2)) throw std::invalid_argument("word not over {a, b}");
  if (a_exponent(u) != 0) throw std::invalid_argument("not in kernel");
  // Scan left to right tracking the running a-exponent k; each b^{+-1} at
  // level k contributes x_k^{+-1}.
  std::vector<std::pair<std::int32_t, std::int64_t>> syls;
  std::int32_t k = 0;
  for (const Letter& l : u.letters()) {
    if (l.id == 1) {
      k += l.exp;
    } else {
      syls.emplace_back(k, l.exp);
    }
  }
  return Word::from_letters(syls);
}

Word rs_back_substitute(const Word& xword) {
  Word out;
  for (const Letter& l : xword.letters()) {
    Word x = Word::generator(1, l.id) * Word::generator(2, l.exp) * Word::generator(1, -l.id);
    out = out * x;
  }
  return out;
}

}  // namespace ordspace
