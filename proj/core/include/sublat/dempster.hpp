// Copyright 2026 The sublat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include <boost/rational.hpp>

namespace sublat::ds {

using Label = std::int64_t;
/// Sorted, duplicate-free set of labels.
using LabelSet = std::vector<Label>;
using Rational = boost::rational<std::int64_t>;

[[nodiscard]] LabelSet make_label_set(std::vector<Label> labels);
[[nodiscard]] LabelSet set_union(const LabelSet& a, const LabelSet& b);
[[nodiscard]] LabelSet set_intersection(const LabelSet& a, const LabelSet& b);
[[nodiscard]] bool is_subset(const LabelSet& a, const LabelSet& b);
[[nodiscard]] bool intersects(const LabelSet& a, const LabelSet& b);

/// The sample space Omega.
class Frame {
public:
    /// Throws InvalidArgument when empty.
    explicit Frame(std::vector<Label> labels);
    /// {lo, lo+1, ..., hi}.
    [[nodiscard]] static Frame range(Label lo, Label hi);

    [[nodiscard]] const LabelSet& elements() const noexcept { return elements_; }
    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
    [[nodiscard]] bool contains(Label x) const noexcept;
    [[nodiscard]] bool contains(const LabelSet& subset) const noexcept;
    /// Throws NotSubsetOfFrame.
    void require(const LabelSet& subset) const;
    [[nodiscard]] LabelSet complement(const LabelSet& subset) const;

    friend bool operator==(const Frame&, const Frame&) = default;

private:
    LabelSet elements_;
};

/// A multivalued map: item i is known only to take a value in sets[i].
class Evidence {
public:
    /// Throws EmptyEvidenceSet or NotSubsetOfFrame.
    Evidence(Frame frame, std::vector<LabelSet> sets);

    [[nodiscard]] const Frame& frame() const noexcept { return frame_; }
    [[nodiscard]] const std::vector<LabelSet>& sets() const noexcept { return sets_; }
    [[nodiscard]] std::size_t size() const noexcept { return sets_.size(); }

private:
    Frame frame_;
    std::vector<LabelSet> sets_;
};

/// For a query set A: items whose set lies in A, straddles A, lies outside A.
struct Categories {
    std::uint64_t inside = 0;
    std::uint64_t dont_know = 0;
    std::uint64_t outside = 0;

    friend bool operator==(const Categories&, const Categories&) = default;
};

[[nodiscard]] Categories categorize(const Evidence& evidence, const LabelSet& query);
/// n1 / n.
[[nodiscard]] Rational belief(const Evidence& evidence, const LabelSet& query);
/// (n1 + n2) / n.
[[nodiscard]] Rational plausibility(const Evidence& evidence, const LabelSet& query);

/// A single-valued refinement: one label from each evidence set.
class Selection {
public:
    /// Throws InvalidSelection unless choices[i] is in evidence.sets()[i] for all i.
    Selection(const Evidence& evidence, std::vector<Label> choices);

    [[nodiscard]] const std::vector<Label>& choices() const noexcept { return choices_; }

private:
    std::vector<Label> choices_;
};

/// k / n where k counts the choices falling in the query.
[[nodiscard]] Rational selection_probability(const Selection& selection, const LabelSet& query);

/// Product of the set sizes.
[[nodiscard]] std::uint64_t selection_count(const Evidence& evidence);
/// Visits every selection in odometer order (last item varies fastest).
void for_each_selection(const Evidence& evidence, const std::function<void(const Selection&)>& f);

/// The evidence rewritten over the atoms of the set algebra generated by the
/// evidence sets and the given queries. Belief and plausibility of any union
/// of atoms equal those of the corresponding union of original labels.
struct CoarseEvidence {
    Evidence evidence;           ///< frame {0, ..., atoms.size() - 1}
    std::vector<LabelSet> atoms; ///< original labels making up each atom

    /// Original labels of a set of atom indices.
    [[nodiscard]] LabelSet expand(const LabelSet& atom_indices) const;
    /// Atom indices of an original set; throws InvalidArgument if it is not a union of atoms.
    [[nodiscard]] LabelSet contract(const LabelSet& labels) const;
};

[[nodiscard]] CoarseEvidence coarsen(const Evidence& evidence,
                                     std::span<const LabelSet> queries = {});

/// All subsets of a frame of at most 20 elements, in binary-counter order.
[[nodiscard]] std::vector<LabelSet> powerset(const Frame& frame);

/// A set function given by value table.
using SetFunction = std::map<LabelSet, Rational>;

[[nodiscard]] SetFunction tabulate(const Frame& frame,
                                   const std::function<Rational(const LabelSet&)>& mu);

struct CapacityVerdict {
    bool normalized = false; ///< mu(empty) = 0 and mu(Omega) = 1
    bool monotone = false;   ///< A in B implies mu(A) <= mu(B)
    bool additive = false;   ///< disjoint A, B give mu(A u B) = mu(A) + mu(B)

    [[nodiscard]] bool is_capacity() const noexcept { return normalized && monotone; }
    [[nodiscard]] bool is_probability() const noexcept { return normalized && additive; }
};

/// Exhaustive over all pairs of subsets; throws MissingValue for absent subsets.
[[nodiscard]] CapacityVerdict capacity_check(const Frame& frame, const SetFunction& mu);

/// W(i | B) = mu(B u {i}) - mu(B).
[[nodiscard]] Rational capacity_added_value(const SetFunction& mu, Label i,
                                          const LabelSet& coalition);

} // namespace sublat::ds
