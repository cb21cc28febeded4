#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qk/error.hpp"

namespace qk {

using Elem = std::size_t;

// Raw order data; leq is row-major with leq[x * n + y] meaning x <= y.
struct LatticeCandidate {
    std::vector<std::string> labels;
    std::vector<char> leq;
};

class CompleteLattice;
struct LatticeValidation;
LatticeValidation validate_lattice(const LatticeCandidate& candidate);
CompleteLattice opposite_lattice(const CompleteLattice& lattice);

class CompleteLattice {
public:
    CompleteLattice() = default;

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& label(Elem e) const { return labels_.at(e); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<Elem> find(const std::string& label) const;

    bool leq(Elem x, Elem y) const noexcept { return leq_[x * size() + y] != 0; }
    Elem join(Elem x, Elem y) const noexcept { return join_[x * size() + y]; }
    Elem meet(Elem x, Elem y) const noexcept { return meet_[x * size() + y]; }
    Elem join(std::span<const Elem> xs) const noexcept;
    Elem meet(std::span<const Elem> xs) const noexcept;
    Elem bottom() const noexcept { return bottom_; }
    Elem top() const noexcept { return top_; }

    const std::vector<char>& order_matrix() const noexcept { return leq_; }
    // Covering pairs (x, y) with x < y and nothing strictly between.
    std::vector<std::pair<Elem, Elem>> covers() const;

    bool operator==(const CompleteLattice& other) const {
        return labels_ == other.labels_ && leq_ == other.leq_;
    }

private:
    friend LatticeValidation validate_lattice(const LatticeCandidate&);
    friend CompleteLattice opposite_lattice(const CompleteLattice&);

    std::vector<std::string> labels_;
    std::vector<char> leq_;
    std::vector<Elem> join_;
    std::vector<Elem> meet_;
    Elem bottom_ = 0;
    Elem top_ = 0;
};

struct LatticeValidation {
    ValidationReport report;
    std::optional<CompleteLattice> lattice;
};

// Subsets are scanned exhaustively up to this many elements; above it the
// check falls back to binary joins plus a bottom element.
inline constexpr std::size_t kExhaustiveLatticeScan = 12;

// Throws StructuralError for empty or duplicate labels and wrong matrix shape.
LatticeValidation validate_lattice(const LatticeCandidate& candidate);
// Same but forces one of the two completeness routes.
ValidationReport check_completeness_exhaustive(const LatticeCandidate& candidate);
ValidationReport check_completeness_binary(const LatticeCandidate& candidate);

// Throws ValidationError when the candidate is not a complete lattice.
CompleteLattice make_lattice(const LatticeCandidate& candidate);
// Reflexive-transitive closure of the generating pairs, then make_lattice.
CompleteLattice lattice_from_order(std::vector<std::string> labels,
                                   const std::vector<std::pair<Elem, Elem>>& generating);
CompleteLattice chain_lattice(std::size_t n);
CompleteLattice chain_lattice(std::vector<std::string> labels);
// Subsets of a k-element set ordered by inclusion; labels list members, "0" is empty.
CompleteLattice powerset_lattice(std::size_t k);
CompleteLattice opposite_lattice(const CompleteLattice& lattice);

// Monotone map preserving binary joins and the bottom element.
bool preserves_joins(const CompleteLattice& source, const CompleteLattice& target,
                     std::span<const Elem> map);
// Checks every subset; only sensible for small sources.
bool preserves_joins_exhaustive(const CompleteLattice& source, const CompleteLattice& target,
                                std::span<const Elem> map);

std::string format_subset(const std::vector<std::string>& labels, std::span<const Elem> subset);

}  // namespace qk
