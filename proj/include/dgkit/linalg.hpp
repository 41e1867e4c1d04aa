#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dgkit/sparse.hpp"

namespace dgkit {

/// Incremental row echelon form over a field.
///
/// Column order is pivot priority: the pivot of a stored row is its smallest
/// column, so callers that want some columns eliminated first simply number
/// them first. Rows carry an optional "history" vector recording which input
/// combination produced them, which gives kernels and solutions for free.
class Echelon {
public:
    explicit Echelon(Field field) : field_(field) {}

    /// Reduces v modulo the stored rows; the remainder has no pivot columns and
    /// is the canonical representative of v in the quotient.
    Vec reduce(Vec v) const;
    /// Same, also returning the combination of histories that was subtracted.
    std::pair<Vec, Vec> reduce_tracked(Vec v, Vec history) const;

    /// Adds a row. Returns false (and leaves the form unchanged) when v is
    /// already in the span. When `history` is given and v is dependent, the
    /// reduced history is written to *dependency.
    bool add(Vec v, Vec history = {}, Vec* dependency = nullptr);

    bool is_pivot(int column) const { return rows_.count(column) > 0; }
    std::size_t rank() const { return rows_.size(); }
    const Field& field() const { return field_; }

    struct Row {
        Vec v;
        Vec history;
    };
    const std::map<int, Row>& rows() const { return rows_; }

private:
    Field field_;
    std::map<int, Row> rows_;
};

/// Basis of the kernel of the linear map sending source basis j to images[j],
/// expressed in source coordinates. Deterministic for a given input order.
std::vector<Vec> kernel(const std::vector<Vec>& images, const Field& field);

/// Rank of the matrix whose rows are the given vectors. Over Q this is
/// fraction-free (Bareiss) elimination on an integer matrix; over F_p plain
/// Gaussian elimination.
std::size_t rank(const std::vector<Vec>& rows, const Field& field);

/// Coordinates of `target` in terms of `vectors` if it lies in their span.
std::optional<Vec> solve(const std::vector<Vec>& vectors, const Vec& target, const Field& field);

}  // namespace dgkit
