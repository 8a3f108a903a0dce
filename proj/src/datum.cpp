#include "symfan/datum.hpp"

#include <sstream>

namespace symfan {

std::string colorName(const ColorId& c) {
  std::ostringstream os;
  os << "D" << (c.corootIndex + 1);
  if (c.slot != 1) os << ":" << c.slot;
  return os.str();
}

namespace {

// Hermitian symmetric spaces have restricted type BC_l, C_l, B_2 or A_1.
bool hermitianTypeAllowed(const RootSystem& rs) {
  if (rs.label().size() != 1) return false;
  const auto& tc = rs.label()[0];
  switch (tc.family) {
    case Family::BC: return true;
    case Family::C: return true;
    case Family::B: return tc.rank == 2;
    case Family::A: return tc.rank == 1;
    default: return false;
  }
}

// Index of the short simple coroot of an irreducible system (the fiber that
// doubles in the Hermitian H = G^theta case).
int shortSimpleCorootIndex(const RootSystem& rs) {
  int best = 0;
  Rational bestLen = rs.pair(rs.simpleCoroots()[0], rs.simpleCoroots()[0]);
  for (int i = 1; i < rs.rank(); ++i) {
    Rational len = rs.pair(rs.simpleCoroots()[static_cast<std::size_t>(i)],
                           rs.simpleCoroots()[static_cast<std::size_t>(i)]);
    if (len < bestLen) {
      best = i;
      bestLen = len;
    }
  }
  return best;
}

}  // namespace

SphericalDatum::SphericalDatum(std::shared_ptr<const RootSystem> rs, Lattice chiStar,
                               std::vector<int> fiberSizes, std::set<int> exceptionalCoroots,
                               bool hermitian, bool requireAdmissibleLattice)
    : rs_(std::move(rs)),
      chiStar_(std::move(chiStar)),
      fibers_(std::move(fiberSizes)),
      exceptional_(std::move(exceptionalCoroots)),
      hermitian_(hermitian) {
  const int n = rs_->rank();
  if (static_cast<int>(fibers_.size()) != n) throw std::domain_error("datum: one fiber size per simple root");
  if (chiStar_.ambientDim() != rs_->ambientDim()) throw std::domain_error("datum: lattice dimension mismatch");
  if (chiStar_.rank() != n) throw std::domain_error("datum: chi_*(S) must have full rank");

  bool upper = true, lower = true;
  for (const auto& b : chiStar_.basis())
    if (!rs_->coweightLattice().contains(b)) upper = false;
  for (const auto& b : rs_->corootLattice().basis())
    if (!chiStar_.contains(b)) lower = false;
  admissible_ = upper && lower;
  if (requireAdmissibleLattice && !admissible_)
    throw std::domain_error("datum: chi_*(S) must sit between coroot and coweight lattice");

  chi_ = chiStar_.dual(rs_->form());
  hIsFixedGroup_ = chiStar_ == rs_->corootLattice();

  for (int i : exceptional_)
    if (i < 0 || i >= n) throw std::domain_error("datum: bad exceptional index");
  if (!exceptional_.empty()) {
    // exceptional roots occur exactly for Hermitian restricted type BC
    if (!hermitian_ || rs_->label().size() != 1 || rs_->label()[0].family != Family::BC)
      throw std::domain_error("datum: exceptional coroots require a Hermitian BC type");
  }
  if (hermitian_ && !hermitianTypeAllowed(*rs_))
    throw std::domain_error("datum: Hermitian flag requires type BC_l, C_l, B_2 or A_1");

  for (int i = 0; i < n; ++i) {
    int f = fibers_[static_cast<std::size_t>(i)];
    if (f != 1 && f != 2) throw std::domain_error("datum: fiber sizes are 1 or 2");
    if (f == 2) {
      bool exceptionalFiber = exceptional_.count(i) > 0;
      bool hermitianFiber =
          hermitian_ && hIsFixedGroup_ && i == shortSimpleCorootIndex(*rs_);
      if (!exceptionalFiber && !hermitianFiber)
        throw std::domain_error("datum: a two-color fiber needs an exceptional coroot or a "
                                "Hermitian H = G^theta short coroot");
    }
    for (int s = 1; s <= f; ++s) colors_.push_back({i, s});
  }
}

SphericalDatum SphericalDatum::plain(std::shared_ptr<const RootSystem> rs, Lattice chiStar) {
  std::vector<int> fibers(static_cast<std::size_t>(rs->rank()), 1);
  return SphericalDatum(std::move(rs), std::move(chiStar), std::move(fibers), {}, false);
}

QVector SphericalDatum::rho(const ColorId& c) const {
  return rs_->simpleCoroots()[static_cast<std::size_t>(c.corootIndex)];
}

bool SphericalDatum::hasColor(const ColorId& c) const {
  return c.corootIndex >= 0 && c.corootIndex < rank() &&
         c.slot >= 1 && c.slot <= fiberSize(c.corootIndex);
}

QVector SphericalDatum::primitiveValuation(const QVector& direction) const {
  return chiStar_.primitiveInLattice(direction);
}

}  // namespace symfan
