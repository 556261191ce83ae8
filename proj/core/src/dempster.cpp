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

#include "sublat/dempster.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "sublat/error.hpp"

namespace sublat::ds {

LabelSet make_label_set(std::vector<Label> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
}

LabelSet set_union(const LabelSet& a, const LabelSet& b) {
    LabelSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

LabelSet set_intersection(const LabelSet& a, const LabelSet& b) {
    LabelSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const LabelSet& a, const LabelSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(const LabelSet& a, const LabelSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) {
            return true;
        }
        if (*i < *j) {
            ++i;
        } else {
            ++j;
        }
    }
    return false;
}

Frame::Frame(std::vector<Label> labels) : elements_(make_label_set(std::move(labels))) {
    if (elements_.empty()) {
        throw Error(ErrorCode::InvalidArgument, "frame must be nonempty");
    }
}

Frame Frame::range(Label lo, Label hi) {
    if (hi < lo) {
        throw Error(ErrorCode::InvalidArgument,
                    "empty frame range " + std::to_string(lo) + ".." + std::to_string(hi));
    }
    std::vector<Label> labels;
    labels.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (Label x = lo; x <= hi; ++x) {
        labels.push_back(x);
    }
    return Frame(std::move(labels));
}

bool Frame::contains(Label x) const noexcept {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool Frame::contains(const LabelSet& subset) const noexcept { return is_subset(subset, elements_); }

void Frame::require(const LabelSet& subset) const {
    for (Label x : subset) {
        if (!contains(x)) {
            throw Error(ErrorCode::NotSubsetOfFrame,
                        "label " + std::to_string(x) + " is not in the frame");
        }
    }
}

LabelSet Frame::complement(const LabelSet& subset) const {
    LabelSet out;
    std::set_difference(elements_.begin(), elements_.end(), subset.begin(), subset.end(),
                        std::back_inserter(out));
    return out;
}

Evidence::Evidence(Frame frame, std::vector<LabelSet> sets)
    : frame_(std::move(frame)), sets_(std::move(sets)) {
    if (sets_.empty()) {
        throw Error(ErrorCode::InvalidArgument, "evidence needs at least one set");
    }
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        sets_[i] = make_label_set(std::move(sets_[i]));
        if (sets_[i].empty()) {
            throw Error(ErrorCode::EmptyEvidenceSet,
                        "set " + std::to_string(i) +
                            " is empty; every evidence set must be nonempty");
        }
        frame_.require(sets_[i]);
    }
}

Categories categorize(const Evidence& evidence, const LabelSet& query) {
    evidence.frame().require(query);
    Categories c;
    for (const LabelSet& g : evidence.sets()) {
        if (is_subset(g, query)) {
            ++c.inside;
        } else if (intersects(g, query)) {
            ++c.dont_know;
        } else {
            ++c.outside;
        }
    }
    return c;
}

Rational belief(const Evidence& evidence, const LabelSet& query) {
    const Categories c = categorize(evidence, query);
    return {static_cast<std::int64_t>(c.inside), static_cast<std::int64_t>(evidence.size())};
}

Rational plausibility(const Evidence& evidence, const LabelSet& query) {
    const Categories c = categorize(evidence, query);
    return {static_cast<std::int64_t>(c.inside + c.dont_know),
            static_cast<std::int64_t>(evidence.size())};
}

Selection::Selection(const Evidence& evidence, std::vector<Label> choices)
    : choices_(std::move(choices)) {
    if (choices_.size() != evidence.size()) {
        throw Error(ErrorCode::InvalidSelection, "selection needs one choice per evidence set");
    }
    for (std::size_t i = 0; i < choices_.size(); ++i) {
        const LabelSet& g = evidence.sets()[i];
        if (!std::binary_search(g.begin(), g.end(), choices_[i])) {
            throw Error(ErrorCode::InvalidSelection, "choice " + std::to_string(choices_[i]) +
                                                         " is not in set " + std::to_string(i));
        }
    }
}

Rational selection_probability(const Selection& selection, const LabelSet& query) {
    const auto& choices = selection.choices();
    const auto hits = std::count_if(choices.begin(), choices.end(), [&](Label x) {
        return std::binary_search(query.begin(), query.end(), x);
    });
    return {static_cast<std::int64_t>(hits), static_cast<std::int64_t>(choices.size())};
}

std::uint64_t selection_count(const Evidence& evidence) {
    std::uint64_t count = 1;
    for (const LabelSet& g : evidence.sets()) {
        count *= g.size();
    }
    return count;
}

void for_each_selection(const Evidence& evidence,
                        const std::function<void(const Selection&)>& f) {
    const auto& sets = evidence.sets();
    std::vector<std::size_t> digits(sets.size(), 0);
    std::vector<Label> choices(sets.size());
    while (true) {
        for (std::size_t i = 0; i < sets.size(); ++i) {
            choices[i] = sets[i][digits[i]];
        }
        f(Selection(evidence, choices));
        std::size_t pos = sets.size();
        while (pos > 0) {
            --pos;
            if (++digits[pos] < sets[pos].size()) {
                break;
            }
            digits[pos] = 0;
            if (pos == 0) {
                return;
            }
        }
    }
}

LabelSet CoarseEvidence::expand(const LabelSet& atom_indices) const {
    LabelSet out;
    for (Label a : atom_indices) {
        const LabelSet& atom = atoms.at(static_cast<std::size_t>(a));
        out.insert(out.end(), atom.begin(), atom.end());
    }
    return make_label_set(std::move(out));
}

LabelSet CoarseEvidence::contract(const LabelSet& labels) const {
    LabelSet out;
    std::size_t covered = 0;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
        if (is_subset(atoms[a], labels)) {
            out.push_back(static_cast<Label>(a));
            covered += atoms[a].size();
        } else if (intersects(atoms[a], labels)) {
            throw Error(ErrorCode::InvalidArgument, "set splits an atom of the coarsened frame");
        }
    }
    if (covered != labels.size()) {
        throw Error(ErrorCode::NotSubsetOfFrame, "set has labels outside the frame");
    }
    return out;
}

CoarseEvidence coarsen(const Evidence& evidence, std::span<const LabelSet> queries) {
    std::vector<const LabelSet*> generators;
    for (const LabelSet& g : evidence.sets()) {
        generators.push_back(&g);
    }
    for (const LabelSet& q : queries) {
        evidence.frame().require(q);
        generators.push_back(&q);
    }

    std::map<std::vector<bool>, std::size_t> atom_of_signature;
    std::vector<LabelSet> atoms;
    for (Label x : evidence.frame().elements()) {
        std::vector<bool> signature;
        signature.reserve(generators.size());
        for (const LabelSet* g : generators) {
            signature.push_back(std::binary_search(g->begin(), g->end(), x));
        }
        auto [it, inserted] = atom_of_signature.emplace(std::move(signature), atoms.size());
        if (inserted) {
            atoms.emplace_back();
        }
        atoms[it->second].push_back(x);
    }

    std::vector<Label> atom_labels(atoms.size());
    for (std::size_t a = 0; a < atoms.size(); ++a) {
        atom_labels[a] = static_cast<Label>(a);
    }
    std::vector<LabelSet> coarse_sets;
    for (const LabelSet& g : evidence.sets()) {
        LabelSet s;
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            if (is_subset(atoms[a], g)) {
                s.push_back(static_cast<Label>(a));
            }
        }
        coarse_sets.push_back(std::move(s));
    }
    return CoarseEvidence{Evidence(Frame(std::move(atom_labels)), std::move(coarse_sets)),
                          std::move(atoms)};
}

std::vector<LabelSet> powerset(const Frame& frame) {
    const std::size_t k = frame.size();
    if (k > 20) {
        throw Error(ErrorCode::InvalidArgument,
                    "powerset of " + std::to_string(k) + " elements is too large; coarsen first");
    }
    std::vector<LabelSet> out;
    out.reserve(std::size_t{1} << k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        LabelSet s;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                s.push_back(frame.elements()[i]);
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

SetFunction tabulate(const Frame& frame, const std::function<Rational(const LabelSet&)>& mu) {
    SetFunction out;
    for (LabelSet& s : powerset(frame)) {
        Rational value = mu(s);
        out.emplace(std::move(s), value);
    }
    return out;
}

namespace {

Rational lookup(const SetFunction& mu, const LabelSet& s) {
    auto it = mu.find(s);
    if (it == mu.end()) {
        std::string text = "{";
        for (Label x : s) {
            text += (text.size() > 1 ? "," : "") + std::to_string(x);
        }
        throw Error(ErrorCode::MissingValue, "set function has no value at " + text + "}");
    }
    return it->second;
}

} // namespace

CapacityVerdict capacity_check(const Frame& frame, const SetFunction& mu) {
    const auto subsets = powerset(frame);
    std::vector<Rational> values;
    values.reserve(subsets.size());
    for (const LabelSet& s : subsets) {
        values.push_back(lookup(mu, s));
    }
    CapacityVerdict verdict;
    verdict.normalized = values.front() == Rational(0) && values.back() == Rational(1);
    verdict.monotone = true;
    verdict.additive = true;
    // Subsets are indexed by bitmask, so inclusion and disjointness are bit tests.
    for (std::size_t a = 0; a < subsets.size(); ++a) {
        for (std::size_t b = 0; b < subsets.size(); ++b) {
            if ((a & b) == a && values[a] > values[b]) {
                verdict.monotone = false;
            }
            if ((a & b) == 0 && values[a | b] != values[a] + values[b]) {
                verdict.additive = false;
            }
        }
    }
    return verdict;
}

Rational capacity_added_value(const SetFunction& mu, Label i, const LabelSet& coalition) {
    return lookup(mu, set_union(coalition, LabelSet{i})) - lookup(mu, coalition);
}

} // namespace sublat::ds
