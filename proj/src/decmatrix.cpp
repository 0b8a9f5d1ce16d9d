#include "nilstalk/decmatrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "nilstalk/stalkcalc.hpp"

namespace nilstalk {

std::int64_t ClassVector::at(const Partition& orbit) const {
    auto it = entries.find(orbit);
    return it == entries.end() ? 0 : it->second;
}

ClassVector class_vector(const StalkTable& t) {
    if (!t.coefficients.is_field())
        throw std::domain_error("class_vector requires field coefficients");
    ClassVector v;
    for (const auto& s : t.strata)
        v.entries[s.orbit] = euler(s.stalk);
    return v;
}

std::int64_t DecompositionMatrix::at(const Partition& row, const Partition& col) const {
    auto ri = std::find(rows.begin(), rows.end(), row);
    auto ci = std::find(cols.begin(), cols.end(), col);
    if (ri == rows.end() || ci == cols.end())
        throw std::domain_error("no such decomposition matrix entry");
    return entries[ri - rows.begin()][ci - cols.begin()];
}

namespace {

/// Ascending linear extension of dominance: n(lambda) strictly reverses
/// dominance, so sorting by it descending works; ties broken lexically.
std::vector<Partition> dominance_sorted(std::vector<Partition> labels) {
    std::sort(labels.begin(), labels.end(), [](const Partition& a, const Partition& b) {
        if (n_stat(a) != n_stat(b)) return n_stat(a) > n_stat(b);
        return a < b;
    });
    return labels;
}

}  // namespace

DecompositionMatrix solve_decomposition(
    const std::vector<std::pair<Partition, ClassVector>>& char0,
    const std::vector<std::pair<Partition, ClassVector>>& modp) {
    if (char0.size() != modp.size())
        throw std::domain_error("solve_decomposition needs equally indexed families");

    std::vector<Partition> labels;
    for (const auto& [p, v] : char0) labels.push_back(p);
    labels = dominance_sorted(labels);

    auto find = [](const std::vector<std::pair<Partition, ClassVector>>& fam,
                   const Partition& p) -> const ClassVector& {
        for (const auto& [q, v] : fam)
            if (q == p) return v;
        throw std::domain_error("missing class vector for " + p.to_string());
    };

    DecompositionMatrix d;
    d.rows = labels;
    d.cols = labels;
    d.entries.assign(labels.size(), std::vector<std::int64_t>(labels.size(), 0));

    for (std::size_t r = 0; r < labels.size(); ++r) {
        ClassVector residual = find(char0, labels[r]);
        // peel off mod-p classes from the top of the dominance order down
        for (std::size_t c = labels.size(); c-- > 0;) {
            const ClassVector& basis = find(modp, labels[c]);
            if (basis.at(labels[c]) != 1)
                throw std::domain_error("mod-p family is not unitriangular at " +
                                        labels[c].to_string());
            std::int64_t coeff = residual.at(labels[c]);
            if (coeff != 0) {
                for (const auto& [orbit, value] : basis.entries)
                    residual.entries[orbit] = residual.at(orbit) - coeff * value;
                d.entries[r][c] = coeff;
            }
        }
        for (const auto& [orbit, value] : residual.entries)
            if (value != 0)
                throw std::domain_error(
                    "inconsistent class vectors: residual left on orbit " +
                    orbit.to_string());
        for (std::size_t c = 0; c < labels.size(); ++c) {
            if (d.entries[r][c] < 0)
                throw std::domain_error("negative decomposition number at row " +
                                        labels[r].to_string());
            if (c > r && d.entries[r][c] != 0)
                throw std::domain_error("decomposition matrix is not unitriangular");
        }
        if (d.entries[r][r] != 1)
            throw std::domain_error("decomposition matrix diagonal is not 1");
    }
    return d;
}

DecompositionMatrix symmetric_group_submatrix(const DecompositionMatrix& d,
                                              std::int64_t ell) {
    DecompositionMatrix out;
    out.symmetric_group_form = true;
    for (const auto& r : d.rows) out.rows.push_back(springer_dual(r));
    std::vector<std::size_t> kept;
    for (std::size_t c = 0; c < d.cols.size(); ++c) {
        Partition dual = springer_dual(d.cols[c]);
        if (is_ell_regular(dual, ell)) {
            kept.push_back(c);
            out.cols.push_back(dual);
        }
    }
    for (const auto& row : d.entries) {
        std::vector<std::int64_t> r;
        for (auto c : kept) r.push_back(row[c]);
        out.entries.push_back(std::move(r));
    }
    return out;
}

DecompositionMatrix nilpotent_decomposition_matrix(const std::string& case_name,
                                                   std::int64_t p) {
    struct Item {
        Partition orbit;
        CaseId id;
        bool skyscraper;
    };
    std::vector<Item> items;
    auto sky = [](std::vector<std::int64_t> parts) {
        return Item{Partition(std::move(parts)), {}, true};
    };
    if (case_name == "sl2") {
        items = {sky({1, 1}), {Partition({2}), {CaseKind::Sl2Cone, 2}, false}};
    } else if (case_name == "sl3") {
        items = {sky({1, 1, 1}),
                 {Partition({2, 1}), {CaseKind::SlnMinimal, 3}, false},
                 {Partition({3}), {CaseKind::Sl3Cone, 3}, false}};
    } else if (case_name == "sl4-22") {
        items = {sky({1, 1, 1, 1}),
                 {Partition({2, 1, 1}), {CaseKind::SlnMinimal, 4}, false},
                 {Partition({2, 2}), {CaseKind::Sl4TwoTwo, 4}, false}};
    } else {
        throw std::domain_error("unknown decomposition case '" + case_name +
                                "' (expected sl2, sl3 or sl4-22)");
    }

    auto classes = [&](const Coefficients& k) {
        std::vector<std::pair<Partition, ClassVector>> fam;
        for (const auto& item : items) {
            if (item.skyscraper) {
                ClassVector v;
                v.entries[item.orbit] = 1;
                fam.emplace_back(item.orbit, v);
            } else {
                fam.emplace_back(item.orbit,
                                 class_vector(ic_stalk_table(item.id, k, Perversity::P)));
            }
        }
        return fam;
    };

    return solve_decomposition(classes(Coefficients::rational()),
                               classes(Coefficients::prime_field(p)));
}

}  // namespace nilstalk
