#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orelab/element_set.hpp"
#include "orelab/errors.hpp"

namespace orelab {

/// Which side a one-sided notion refers to. For regular elements
/// `two_sided` means "left and right".
enum class Side { left, right, two_sided };

std::string_view to_string(Side side);

/// A finite ring with 1 given by explicit addition and multiplication
/// tables over element ids 0..size-1. Immutable; copies share the tables.
class FiniteRing {
public:
    /// Builds a ring from row-major size*size tables and checks the ring
    /// axioms (exhaustively for size <= 64, on 10^4 seeded random triples
    /// above). If `zero` is omitted it is located as the additive identity.
    static FiniteRing from_tables(std::string label, std::size_t size, std::vector<Elem> add,
                                  std::vector<Elem> mul, Elem one,
                                  std::optional<Elem> zero = std::nullopt,
                                  std::vector<FiniteRing> factors = {});

    std::size_t size() const { return d_->size; }
    Elem zero() const { return d_->zero; }
    Elem one() const { return d_->one; }
    const std::string& label() const { return d_->label; }

    Elem add(Elem a, Elem b) const { return d_->add[a * d_->size + b]; }
    Elem mul(Elem a, Elem b) const { return d_->mul[a * d_->size + b]; }
    Elem neg(Elem a) const { return d_->neg[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    const std::vector<Elem>& add_table() const { return d_->add; }
    const std::vector<Elem>& mul_table() const { return d_->mul; }

    bool is_commutative() const;

    /// Factors when the ring was built as a direct product (ids are then
    /// lexicographic in the factor ids, first factor most significant).
    const std::vector<FiniteRing>& factors() const { return d_->factors; }

    FiniteRing with_label(std::string label) const;

    ElementSet empty_set() const { return ElementSet(size()); }
    ElementSet all() const { return ElementSet::full(size()); }

    /// Same underlying tables (identity, not isomorphism).
    friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
        return a.d_ == b.d_ || (a.d_->size == b.d_->size && a.d_->add == b.d_->add &&
                                a.d_->mul == b.d_->mul && a.d_->one == b.d_->one);
    }

private:
    struct Data {
        std::string label;
        std::size_t size = 0;
        std::vector<Elem> add, mul, neg;
        Elem zero = 0, one = 0;
        std::vector<FiniteRing> factors;
    };
    explicit FiniteRing(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

enum class IdealKind { left, right, two_sided };

/// An ideal of the given kind: member mask plus a generator list whose
/// closure is exactly the members.
struct IdealData {
    IdealKind kind = IdealKind::two_sided;
    ElementSet members;
    std::vector<Elem> generators;

    bool contains(Elem e) const { return members.contains(e); }
    std::size_t size() const { return members.size(); }
    friend bool operator==(const IdealData& a, const IdealData& b) { return a.members == b.members; }
};

/// A map between finite rings, stored as an element-id table.
struct RingMorphism {
    FiniteRing source;
    FiniteRing target;
    std::vector<Elem> map;

    Elem operator()(Elem x) const { return map[x]; }
    /// Exhaustive check of additivity, multiplicativity and map(1) = 1.
    bool is_homomorphism() const;
    bool is_bijective() const;
    ElementSet kernel() const;
    ElementSet image(const ElementSet& s) const;
    ElementSet preimage(const ElementSet& t) const;
};

RingMorphism identity_morphism(const FiniteRing& r);
RingMorphism compose(const RingMorphism& second, const RingMorphism& first);

/// Elements u with ux = xu = 1 for some x.
ElementSet units(const FiniteRing& r);
/// side=left: r*x = 0 implies x = 0; side=right: x*r = 0 implies x = 0;
/// two_sided: both.
ElementSet regular_elements(const FiniteRing& r, Side side);

bool is_idempotent(const FiniteRing& r, Elem e);
bool is_central(const FiniteRing& r, Elem e);

/// Smallest ideal of the given kind containing `gens` (worklist closure).
IdealData ideal_generated_by(const FiniteRing& r, const std::vector<Elem>& gens, IdealKind kind);
/// Wraps a member mask known to be an ideal; the generator list is chosen
/// greedily in id order.
IdealData ideal_from_members(const FiniteRing& r, const ElementSet& members, IdealKind kind);
/// True iff `members` is an additive subgroup closed under the
/// multiplications `kind` requires.
bool is_ideal(const FiniteRing& r, const ElementSet& members, IdealKind kind);

/// Every two-sided ideal, as the join-closure of the principal ones.
/// Sorted by member list.
std::vector<IdealData> two_sided_ideals(const FiniteRing& r);
/// Every left ideal (join-closure of principal left ideals), sorted.
std::vector<IdealData> left_ideals(const FiniteRing& r);

struct QuotientRing {
    FiniteRing ring;
    RingMorphism projection;
};

/// R/a with cosets numbered by their least representative.
/// Throws ArgumentError unless `a` is a proper two-sided ideal.
QuotientRing quotient_ring(const FiniteRing& r, const IdealData& a);

struct SemiprimeResult {
    bool semiprime = true;
    std::optional<IdealData> witness;  // a nonzero ideal with square zero
};
SemiprimeResult is_semiprime(const FiniteRing& r);

/// One block eR of the central decomposition R = prod eR.
struct CentralFactor {
    Elem idempotent;
    FiniteRing factor;
    RingMorphism projection;  // r -> er
};
/// Primitive central idempotents (ascending id) with their factor rings.
std::vector<CentralFactor> central_idempotent_decomposition(const FiniteRing& r);

/// All ring homomorphisms source -> target (backtracking with propagation).
std::vector<RingMorphism> ring_homomorphisms(const FiniteRing& source, const FiniteRing& target);
std::vector<RingMorphism> ring_automorphisms(const FiniteRing& r);

/// True iff every left ideal has a complementary left ideal.
bool is_semisimple(const FiniteRing& r);
/// Intersection of the maximal left ideals.
ElementSet jacobson_radical(const FiniteRing& r);

// Constructions. Labels are the canonical ring-spec strings.
FiniteRing zmod(long n);
FiniteRing matrix_ring(const FiniteRing& base, int k);
FiniteRing triangular_ring(const FiniteRing& base, int k);
FiniteRing product_ring(const std::vector<FiniteRing>& factors);
/// group is "C<n>" or "S3".
FiniteRing group_algebra(const FiniteRing& base, std::string_view group);

/// Parses a ring-spec expression and builds the ring. See ring_spec.cpp for
/// the grammar. Throws ParseError, ArgumentError or RingAxiomError.
FiniteRing build_ring(std::string_view spec);

}  // namespace orelab
