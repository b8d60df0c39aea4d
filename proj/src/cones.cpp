#include "ordspace/cones.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordspace/nc_poly.hpp"
#include "ordspace/relmagnus.hpp"

namespace ordspace {

int ConeNode::sign(const Element& g) const {
  if (is_identity(g)) throw std::domain_error("identity has no sign");
  return do_sign(g);
}

namespace {

int sgn64(std::int64_t v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

class MagnusCone final : public ConeNode {
 public:
  explicit MagnusCone(std::optional<std::int32_t> rank) : rank_(rank) {}

  GroupDescriptor group() const override { return GroupDescriptor::free_group(rank_); }

  nlohmann::ordered_json to_json() const override {
    nlohmann::ordered_json j;
    j["kind"] = "magnus";
    if (rank_) j["rank"] = *rank_;
    return j;
  }

 protected:
  int do_sign(const Element& g) const override {
    const Word& w = std::get<Word>(g);
    if (rank_ && !w.ids_in_range(*rank_)) {
      throw std::invalid_argument("word uses a generator outside the declared rank");
    }
    return magnus_sign(w);
  }

 private:
  std::optional<std::int32_t> rank_;
};

class IntIndexedMagnusCone final : public ConeNode {
 public:
  GroupDescriptor group() const override { return GroupDescriptor::free_group(std::nullopt); }

  nlohmann::ordered_json to_json() const override {
    nlohmann::ordered_json j;
    j["kind"] = "opaque";
    j["note"] = "magnus cone on an integer-indexed basis";
    return j;
  }

 protected:
  int do_sign(const Element& g) const override {
    return magnus_sign(zigzag_relabel(std::get<Word>(g)));
  }
};

class TararinSignsCone final : public ConeNode {
 public:
  TararinSignsCone(std::vector<int> signs, bool infinite)
      : signs_(std::move(signs)), infinite_(infinite) {
    if (!infinite_ && signs_.empty()) {
      throw std::invalid_argument("at least one generator sign required");
    }
    for (int s : signs_) {
      if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
    }
  }

  GroupDescriptor group() const override {
    return infinite_ ? GroupDescriptor::tararin_inf()
                     : GroupDescriptor::tararin(static_cast<std::int32_t>(signs_.size()));
  }

  nlohmann::ordered_json to_json() const override {
    nlohmann::ordered_json j;
    j["kind"] = "tararin";
    j["signs"] = signs_;
    j["infinite"] = infinite_;
    return j;
  }

 protected:
  int do_sign(const Element& g) const override {
    const auto& t = std::get<TararinElement>(g);
    std::size_t top = t.exp.size();  // trailing zeros trimmed, so top is nonzero
    if (!infinite_ && top > signs_.size()) {
      throw std::invalid_argument("element uses a generator outside Tararin(n)");
    }
    int s = top <= signs_.size() ? signs_[top - 1] : 1;
    return s * sgn64(t.exp[top - 1]);
  }

 private:
  std::vector<int> signs_;
  bool infinite_;
};

// Full-rank check over Q by fraction-free elimination.
bool full_row_rank(std::vector<ZVector> rows) {
  std::size_t k = rows.empty() ? 0 : rows.front().size();
  if (rows.size() != k) return false;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < k && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      std::int64_t f = rows[r][col];
      std::int64_t p = rows[rank][col];
      for (std::size_t c = 0; c < k; ++c) rows[r][c] = rows[r][c] * p - f * rows[rank][c];
    }
    ++rank;
  }
  return rank == k;
}

class IntLexCone final : public ConeNode {
 public:
  explicit IntLexCone(std::vector<ZVector> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("at least one functional required");
    if (!full_row_rank(rows_)) {
      throw std::invalid_argument("functionals must be independent (full rank)");
    }
  }

  GroupDescriptor group() const override {
    return GroupDescriptor::free_abelian(static_cast<std::int32_t>(rows_.front().size()));
  }

  nlohmann::ordered_json to_json() const override {
    nlohmann::ordered_json j;
    if (rows_.size() == 2) {
      j["kind"] = "z2";
      j["u"] = rows_[0];
      j["w"] = rows_[1];
    } else {
      j["kind"] = "int_lex";
      j["rows"] = rows_;
    }
    return j;
  }

  int value_sign(const ZVector& v) const {
    for (const ZVector& row : rows_) {
      std::int64_t dot = 0;
      for (std::size_t i = 0; i < v.size(); ++i) dot += row[i] * v[i];
      if (dot != 0) return sgn64(dot);
    }
    throw std::logic_error("full-rank functionals cannot all vanish on a nonzero vector");
  }

 protected:
  int do_sign(const Element& g) const override { return value_sign(std::get<ZVector>(g)); }

 private:
  std::vector<ZVector> rows_;
};

class KleinCone final : public ConeNode {
 public:
  KleinCone(const ZVector& u, const ZVector& w, int z_sign)
      : z2_(std::vector<ZVector>{u, w}), z_sign_(z_sign) {
    if (u.size() != 2 || w.size() != 2) throw std::invalid_argument("u, w must lie in Z^2");
    if (z_sign != 1 && z_sign != -1) throw std::invalid_argument("z sign must be +1 or -1");
  }

  GroupDescriptor group() const override { return GroupDescriptor::klein(); }

  nlohmann::ordered_json to_json() const override {
    nlohmann::ordered_json inner = z2_.to_json();
    nlohmann::ordered_json j;
    j["kind"] = "klein";
    j["u"] = inner["u"];
    j["w"] = inner["w"];
    j["zsign"] = z_sign_;
    return j;
  }

 protected:
  int do_sign(const Element& g) const override {
    const auto& e = std::get<KleinElement>(g);
    if (e.k != 0) return z_sign_ * sgn64(e.k);
    return z2_.value_sign({e.v1, e.v2});
  }

 private:
  IntLexCone z2_;
  int z_sign_;
};

class OppositeCone final : public ConeNode {
 public:
  explicit OppositeCone(ConePtr inner) : inner_(std::move(inner)) {}

  GroupDescriptor group() const override { return inner_->group(); }

  nlohmann::ordered_json to_json() const override {
    nlohmann::ordered_json j;
    j["kind"] = "opposite";
    j["cone"] = inner_->to_json();
    return j;
  }

  const ConePtr& inner() const { return inner_; }

 protected:
  int do_sign(const Element& g) const override { return -inner_->sign(g); }

 private:
  ConePtr inner_;
};

class ConjugateCone final : public ConeNode {
 public:
  ConjugateCone(Element g, ConePtr inner)
      : by_(std::move(g)), inner_(std::move(inner)) {
    by_inv_ = inv(inner_->group(), by_);
  }

  GroupDescriptor group() const override { return inner_->group(); }

  nlohmann::ordered_json to_json() const override {
    nlohmann::ordered_json j;
    j["kind"] = "conjugate";
    j["by"] = element_to_json(inner_->group(), by_);
    j["cone"] = inner_->to_json();
    return j;
  }

 protected:
  // sign_{gPg^{-1}}(h) = sign_P(g^{-1} h g)
  int do_sign(const Element& h) const override {
    return inner_->sign(conj(inner_->group(), by_inv_, h));
  }

 private:
  Element by_;
  Element by_inv_;
  ConePtr inner_;
};

class ConstantCone final : public ConeNode {
 public:
  ConstantCone(GroupDescriptor group, int sign) : group_(group), sign_(sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  }

  GroupDescriptor group() const override { return group_; }

  nlohmann::ordered_json to_json() const override {
    nlohmann::ordered_json j;
    j["kind"] = "const";
    j["group"] = group_to_json(group_);
    j["sign"] = sign_;
    return j;
  }

 protected:
  int do_sign(const Element&) const override { return sign_; }

 private:
  GroupDescriptor group_;
  int sign_;
};

class LexDirectSumCone final : public ConeNode {
 public:
  LexDirectSumCone(std::function<bool(const Word&, const Word&)> index_less,
                   std::function<int(const Word&, std::int64_t)> factor_sign)
      : less_(std::move(index_less)), factor_(std::move(factor_sign)) {}

  GroupDescriptor group() const override { return GroupDescriptor::wreath(); }

  nlohmann::ordered_json to_json() const override {
    nlohmann::ordered_json j;
    j["kind"] = "opaque";
    j["note"] = "lexicographic direct-sum cone";
    return j;
  }

 protected:
  int do_sign(const Element& g) const override {
    const auto& w = std::get<WreathElement>(g);
    if (!w.top.empty()) {
      throw std::domain_error("lexicographic direct-sum cone is defined on the base subgroup");
    }
    const Word* least = nullptr;
    for (const auto& [x, c] : w.lamps) {
      (void)c;
      if (least == nullptr || less_(x, *least)) least = &x;
    }
    return factor_(*least, w.lamps.at(*least));
  }

 private:
  std::function<bool(const Word&, const Word&)> less_;
  std::function<int(const Word&, std::int64_t)> factor_;
};

int ra_sign(const SetDescriptor& A, int base_sign, const WreathElement& w) {
  if (!w.top.empty()) {
    throw std::domain_error("R_A is defined on the base subgroup");
  }
  const Word* least = nullptr;
  for (const auto& [x, c] : w.lamps) {
    (void)c;
    if (least == nullptr || magnus_less(x, *least)) least = &x;
  }
  int factor = A.contains(*least) ? base_sign : -base_sign;
  return factor * sgn64(w.lamps.at(*least));
}

class WreathRACone final : public ConeNode {
 public:
  WreathRACone(SetDescriptor A, int base_sign) : A_(std::move(A)), base_(base_sign) {
    if (base_sign != 1 && base_sign != -1) throw std::invalid_argument("base sign must be +1 or -1");
  }

  GroupDescriptor group() const override { return GroupDescriptor::wreath(); }

  nlohmann::ordered_json to_json() const override {
    nlohmann::ordered_json j;
    j["kind"] = "wreath_ra";
    j["A"] = A_.to_json();
    j["base"] = base_;
    return j;
  }

 protected:
  int do_sign(const Element& g) const override {
    return ra_sign(A_, base_, std::get<WreathElement>(g));
  }

 private:
  SetDescriptor A_;
  int base_;
};

class PhiCone final : public ConeNode {
 public:
  explicit PhiCone(SetDescriptor A) : A_(std::move(A)) {}

  GroupDescriptor group() const override { return GroupDescriptor::wreath(); }

  nlohmann::ordered_json to_json() const override {
    nlohmann::ordered_json j;
    j["kind"] = "phi";
    j["A"] = A_.to_json();
    return j;
  }

 protected:
  int do_sign(const Element& g) const override {
    const auto& w = std::get<WreathElement>(g);
    if (!w.top.empty()) return magnus_sign(w.top);
    return ra_sign(A_, 1, w);
  }

 private:
  SetDescriptor A_;
};

class SesLexCone final : public ConeNode {
 public:
  SesLexCone(GroupDescriptor source, GroupDescriptor target,
             std::function<Element(const Element&)> quotient_map, ConePtr kernel_cone,
             ConePtr quotient_cone)
      : source_(source),
        target_(target),
        q_(std::move(quotient_map)),
        kernel_(std::move(kernel_cone)),
        quotient_(std::move(quotient_cone)) {}

  GroupDescriptor group() const override { return source_; }

  nlohmann::ordered_json to_json() const override {
    nlohmann::ordered_json j;
    j["kind"] = "opaque";
    j["note"] = "short-exact-sequence lexicographic cone";
    return j;
  }

 protected:
  int do_sign(const Element& g) const override {
    Element image = q_(g);
    if (!is_identity(image)) return quotient_->sign(image);
    return kernel_->sign(g);
  }

 private:
  GroupDescriptor source_, target_;
  std::function<Element(const Element&)> q_;
  ConePtr kernel_, quotient_;
};

class HomSesCone final : public ConeNode {
 public:
  HomSesCone(std::vector<std::int64_t> images, ConePtr kernel_cone, ConePtr quotient_cone)
      : images_(std::move(images)), kernel_(std::move(kernel_cone)), quotient_(std::move(quotient_cone)) {}

  GroupDescriptor group() const override {
    return GroupDescriptor::free_group(static_cast<std::int32_t>(images_.size()));
  }

  nlohmann::ordered_json to_json() const override {
    nlohmann::ordered_json j;
    j["kind"] = "ses_hom";
    j["images"] = images_;
    j["kernel"] = kernel_->to_json();
    j["quotient"] = quotient_->to_json();
    return j;
  }

 protected:
  int do_sign(const Element& g) const override {
    const Word& w = std::get<Word>(g);
    std::int64_t s = 0;
    for (const Letter& l : w.letters()) {
      if (l.id < 1 || l.id > static_cast<std::int32_t>(images_.size())) {
        throw std::invalid_argument("word not over the source alphabet");
      }
      s += l.exp * images_[static_cast<std::size_t>(l.id - 1)];
    }
    if (s != 0) return quotient_->sign(Element{ZVector{s}});
    return kernel_->sign(g);
  }

 private:
  std::vector<std::int64_t> images_;
  ConePtr kernel_, quotient_;
};

class CoverSesCone final : public ConeNode {
 public:
  CoverSesCone(std::int32_t cover_rank, GroupDescriptor target, ConePtr kernel_cone,
               ConePtr quotient_cone)
      : rank_(cover_rank),
        target_(target),
        kernel_(std::move(kernel_cone)),
        quotient_(std::move(quotient_cone)) {}

  GroupDescriptor group() const override { return GroupDescriptor::free_group(rank_); }

  nlohmann::ordered_json to_json() const override {
    nlohmann::ordered_json j;
    j["kind"] = "ses_cover";
    j["cover_rank"] = rank_;
    j["target"] = group_to_json(target_);
    j["kernel"] = kernel_->to_json();
    j["quotient"] = quotient_->to_json();
    return j;
  }

 protected:
  int do_sign(const Element& g) const override {
    Element image = eval_word(target_, std::get<Word>(g));
    if (!is_identity(image)) return quotient_->sign(image);
    return kernel_->sign(g);
  }

 private:
  std::int32_t rank_;
  GroupDescriptor target_;
  ConePtr kernel_, quotient_;
};

class RelConvexCone final : public ConeNode {
 public:
  RelConvexCone(GroupDescriptor ambient, ConePtr subgroup_cone, SubsetOracle Q)
      : ambient_(ambient), p_(std::move(subgroup_cone)), q_(std::move(Q)) {}

  GroupDescriptor group() const override { return ambient_; }

  nlohmann::ordered_json to_json() const override {
    nlohmann::ordered_json j;
    j["kind"] = "relconvex";
    j["P"] = p_->to_json();
    j["Q"] = q_.descriptor;
    return j;
  }

 protected:
  int do_sign(const Element& g) const override {
    if (q_.in_subgroup(g)) return p_->sign(g);
    return q_.q_sign(g);
  }

 private:
  GroupDescriptor ambient_;
  ConePtr p_;
  SubsetOracle q_;
};

class RelabelCone final : public ConeNode {
 public:
  RelabelCone(GroupDescriptor outer, std::function<std::int32_t(std::int32_t)> relabel,
              ConePtr inner)
      : outer_(outer), relabel_(std::move(relabel)), inner_(std::move(inner)) {}

  GroupDescriptor group() const override { return outer_; }

  nlohmann::ordered_json to_json() const override {
    nlohmann::ordered_json j;
    j["kind"] = "opaque";
    j["note"] = "relabeled cone";
    return j;
  }

 protected:
  int do_sign(const Element& g) const override {
    const Word& w = std::get<Word>(g);
    std::vector<std::pair<std::int32_t, std::int64_t>> syls;
    for (const Letter& l : w.letters()) syls.emplace_back(relabel_(l.id), l.exp);
    return inner_->sign(Element{Word::from_letters(syls)});
  }

 private:
  GroupDescriptor outer_;
  std::function<std::int32_t(std::int32_t)> relabel_;
  ConePtr inner_;
};

class RsPullbackCone final : public ConeNode {
 public:
  explicit RsPullbackCone(ConePtr inner) : inner_(std::move(inner)) {}

  GroupDescriptor group() const override { return GroupDescriptor::free_group(2); }

  nlohmann::ordered_json to_json() const override {
    nlohmann::ordered_json j;
    j["kind"] = "opaque";
    j["note"] = "cone on ker(h) via Reidemeister-Schreier rewriting";
    return j;
  }

 protected:
  int do_sign(const Element& g) const override {
    return inner_->sign(Element{rs_rewrite(std::get<Word>(g))});
  }

 private:
  ConePtr inner_;
};

}  // namespace

// --- factories ---------------------------------------------------------------

ConePtr magnus_cone(std::optional<std::int32_t> rank) {
  return std::make_shared<MagnusCone>(rank);
}

ConePtr tararin_signs_cone(std::vector<int> signs, bool infinite) {
  return std::make_shared<TararinSignsCone>(std::move(signs), infinite);
}

ConePtr int_lex_cone(std::vector<ZVector> rows) {
  return std::make_shared<IntLexCone>(std::move(rows));
}

ConePtr z2_cone(const ZVector& u, const ZVector& w) {
  if (u.size() != 2 || w.size() != 2) throw std::invalid_argument("u, w must lie in Z^2");
  return int_lex_cone({u, w});
}

ConePtr klein_cone(const ZVector& u, const ZVector& w, int z_sign) {
  return std::make_shared<KleinCone>(u, w, z_sign);
}

ConePtr opposite_cone(ConePtr inner) { return std::make_shared<OppositeCone>(std::move(inner)); }

ConePtr conjugate_cone(const Element& g, ConePtr inner) {
  return std::make_shared<ConjugateCone>(g, std::move(inner));
}

ConePtr constant_cone(GroupDescriptor group, int sign) {
  return std::make_shared<ConstantCone>(group, sign);
}

ConePtr lex_direct_sum_cone(std::function<bool(const Word&, const Word&)> index_less,
                            std::function<int(const Word&, std::int64_t)> factor_sign) {
  return std::make_shared<LexDirectSumCone>(std::move(index_less), std::move(factor_sign));
}

ConePtr wreath_ra_cone(SetDescriptor A, int base_sign) {
  return std::make_shared<WreathRACone>(std::move(A), base_sign);
}

ConePtr phi_cone(SetDescriptor A) { return std::make_shared<PhiCone>(std::move(A)); }

ConePtr ses_lex_cone(GroupDescriptor source, GroupDescriptor target,
                     std::function<Element(const Element&)> quotient_map, ConePtr kernel_cone,
                     ConePtr quotient_cone) {
  return std::make_shared<SesLexCone>(source, target, std::move(quotient_map),
                                      std::move(kernel_cone), std::move(quotient_cone));
}

ConePtr hom_ses_cone(std::vector<std::int64_t> images, ConePtr kernel_cone, ConePtr quotient_cone) {
  return std::make_shared<HomSesCone>(std::move(images), std::move(kernel_cone),
                                      std::move(quotient_cone));
}

ConePtr cover_ses_cone(std::int32_t cover_rank, GroupDescriptor target, ConePtr kernel_cone,
                       ConePtr quotient_cone) {
  return std::make_shared<CoverSesCone>(cover_rank, target, std::move(kernel_cone),
                                        std::move(quotient_cone));
}

ConePtr relconvex_ext_cone(GroupDescriptor ambient, ConePtr subgroup_cone, SubsetOracle Q) {
  return std::make_shared<RelConvexCone>(ambient, std::move(subgroup_cone), std::move(Q));
}

ConePtr relabel_cone(GroupDescriptor outer, std::function<std::int32_t(std::int32_t)> relabel,
                     ConePtr inner) {
  return std::make_shared<RelabelCone>(outer, std::move(relabel), std::move(inner));
}

ConePtr rs_pullback_cone(ConePtr inner_on_x_words) {
  return std::make_shared<RsPullbackCone>(std::move(inner_on_x_words));
}

ConePtr int_indexed_magnus_cone() { return std::make_shared<IntIndexedMagnusCone>(); }

// --- subset oracles ----------------------------------------------------------

SubsetOracle free_factor_Q(std::optional<std::int32_t> ambient_rank,
                           std::vector<std::int32_t> factor_ids) {
  if (ambient_rank) {
    for (std::int32_t id : factor_ids) {
      if (id < 1 || id > *ambient_rank) {
        throw std::invalid_argument("factor is not a free factor of the ambient group");
      }
    }
    if (static_cast<std::int32_t>(factor_ids.size()) >= *ambient_rank) {
      throw std::invalid_argument("factor must be a proper free factor");
    }
  }
  auto oracle = std::make_shared<FreeFactorOracle>(factor_ids);
  SubsetOracle q;
  q.in_subgroup = [oracle](const Element& g) { return oracle->in_factor(std::get<Word>(g)); };
  q.q_sign = [oracle](const Element& g) { return oracle->q_sign(std::get<Word>(g)); };
  q.descriptor["kind"] = "free_factor";
  if (ambient_rank) q.descriptor["ambient_rank"] = *ambient_rank;
  q.descriptor["factor"] = factor_ids;
  return q;
}

SubsetOracle hom_positive_Q(std::vector<std::int64_t> images) {
  auto eval = [images](const Element& g) {
    const Word& w = std::get<Word>(g);
    std::int64_t s = 0;
    for (const Letter& l : w.letters()) {
      if (l.id < 1 || l.id > static_cast<std::int32_t>(images.size())) {
        throw std::invalid_argument("word not over the source alphabet");
      }
      s += l.exp * images[static_cast<std::size_t>(l.id - 1)];
    }
    return s;
  };
  SubsetOracle q;
  q.in_subgroup = [eval](const Element& g) { return eval(g) == 0; };
  q.q_sign = [eval](const Element& g) {
    std::int64_t s = eval(g);
    if (s == 0) throw std::invalid_argument("element lies in the kernel");
    return s > 0 ? 1 : -1;
  };
  q.descriptor["kind"] = "hom_positive";
  q.descriptor["images"] = images;
  return q;
}

// --- serialization -----------------------------------------------------------

nlohmann::ordered_json cone_to_json(const ConePtr& cone) { return cone->to_json(); }

namespace {

SubsetOracle oracle_from_json(const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "free_factor") {
    std::optional<std::int32_t> rank;
    if (j.contains("ambient_rank")) rank = j["ambient_rank"].get<std::int32_t>();
    std::vector<std::int32_t> factor;
    if (j.contains("factor")) {
      factor = j["factor"].get<std::vector<std::int32_t>>();
    } else {
      std::int32_t fr = j.at("factor_rank").get<std::int32_t>();
      for (std::int32_t i = 1; i <= fr; ++i) factor.push_back(i);
    }
    return free_factor_Q(rank, std::move(factor));
  }
  if (kind == "hom_positive") {
    return hom_positive_Q(j.at("images").get<std::vector<std::int64_t>>());
  }
  throw std::invalid_argument("unknown subset oracle kind: " + kind);
}

GroupDescriptor ambient_of_oracle(const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "free_factor") {
    if (j.contains("ambient_rank")) {
      return GroupDescriptor::free_group(j["ambient_rank"].get<std::int32_t>());
    }
    return GroupDescriptor::free_group(std::nullopt);
  }
  if (kind == "hom_positive") {
    return GroupDescriptor::free_group(
        static_cast<std::int32_t>(j.at("images").size()));
  }
  throw std::invalid_argument("unknown subset oracle kind: " + kind);
}

}  // namespace

ConePtr cone_from_json(const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "magnus") {
    std::optional<std::int32_t> rank;
    if (j.contains("rank")) rank = j["rank"].get<std::int32_t>();
    return magnus_cone(rank);
  }
  if (kind == "tararin") {
    bool infinite = j.value("infinite", false);
    return tararin_signs_cone(j.at("signs").get<std::vector<int>>(), infinite);
  }
  if (kind == "z2") {
    return z2_cone(j.at("u").get<ZVector>(), j.at("w").get<ZVector>());
  }
  if (kind == "zsign") {
    return int_lex_cone({ZVector{j.at("s").get<std::int64_t>()}});
  }
  if (kind == "int_lex") {
    return int_lex_cone(j.at("rows").get<std::vector<ZVector>>());
  }
  if (kind == "klein") {
    return klein_cone(j.at("u").get<ZVector>(), j.at("w").get<ZVector>(),
                      j.at("zsign").get<int>());
  }
  if (kind == "opposite") {
    return opposite_cone(cone_from_json(j.at("cone")));
  }
  if (kind == "conjugate") {
    ConePtr inner = cone_from_json(j.at("cone"));
    Element by = element_from_json(inner->group(), j.at("by"));
    return conjugate_cone(by, inner);
  }
  if (kind == "const") {
    return constant_cone(group_from_json(j.at("group")), j.at("sign").get<int>());
  }
  if (kind == "wreath_ra") {
    return wreath_ra_cone(SetDescriptor::from_json(j.at("A")), j.value("base", 1));
  }
  if (kind == "phi") {
    return phi_cone(SetDescriptor::from_json(j.at("A")));
  }
  if (kind == "ses_hom") {
    return hom_ses_cone(j.at("images").get<std::vector<std::int64_t>>(),
                        cone_from_json(j.at("kernel")), cone_from_json(j.at("quotient")));
  }
  if (kind == "ses_cover") {
    return cover_ses_cone(j.at("cover_rank").get<std::int32_t>(),
                          group_from_json(j.at("target")), cone_from_json(j.at("kernel")),
                          cone_from_json(j.at("quotient")));
  }
  if (kind == "relconvex") {
    SubsetOracle q = oracle_from_json(j.at("Q"));
    return relconvex_ext_cone(ambient_of_oracle(j.at("Q")), cone_from_json(j.at("P")),
                              std::move(q));
  }
  throw std::invalid_argument("unknown cone kind: " + kind);
}

}  // namespace ordspace
