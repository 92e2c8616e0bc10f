#include "ndga/graded.hpp"

#include <sstream>
#include <utility>

#include "ndga/errors.hpp"

namespace ndga {

GradedSpace::GradedSpace(Components components) {
    for (auto& [degree, basis] : components) {
        if (basis.empty()) continue;
        offsets_[degree] = labels_.size();
        for (const auto& label : basis) {
            if (!index_.emplace(label, labels_.size()).second) {
                throw StructuralError("duplicate basis label \"" + label + "\"");
            }
            labels_.push_back(label);
            degree_at_.push_back(degree);
        }
        components_.emplace(degree, std::move(basis));
    }
}

std::vector<int> GradedSpace::degrees() const {
    std::vector<int> out;
    for (const auto& [degree, basis] : components_) out.push_back(degree);
    return out;
}

std::size_t GradedSpace::dim(int degree) const {
    auto it = components_.find(degree);
    return it == components_.end() ? 0 : it->second.size();
}

int GradedSpace::degree_of(const std::string& label) const { return degree_at_[index_of(label)]; }

std::size_t GradedSpace::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw StructuralError("unknown basis label \"" + label + "\"");
    return it->second;
}

std::size_t GradedSpace::offset(int degree) const {
    auto it = offsets_.find(degree);
    if (it == offsets_.end()) throw StructuralError("degree " + std::to_string(degree) + " is empty");
    return it->second;
}

Vector GradedSpace::restrict(const Vector& global, int degree) const {
    if (global.size() != total_dim()) throw StructuralError("vector length does not match space");
    const std::size_t n = dim(degree);
    if (n == 0) return {};
    const std::size_t off = offset(degree);
    return Vector(global.begin() + static_cast<std::ptrdiff_t>(off), global.begin() + static_cast<std::ptrdiff_t>(off + n));
}

Vector GradedSpace::embed(const Vector& local, int degree) const {
    if (local.size() != dim(degree)) throw StructuralError("local vector length does not match degree " + std::to_string(degree));
    Vector out(total_dim());
    if (local.empty()) return out;
    const std::size_t off = offset(degree);
    for (std::size_t i = 0; i < local.size(); ++i) out[off + i] = local[i];
    return out;
}

Vector GradedSpace::basis_vector(const std::string& label) const {
    Vector v(total_dim());
    v[index_of(label)] = 1;
    return v;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

GradedMap::GradedMap(SpacePtr source, SpacePtr target, int degree)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree) {
    if (!source_ || !target_) throw StructuralError("graded map needs source and target spaces");
}

GradedMap GradedMap::identity(const SpacePtr& space) {
    GradedMap id(space, space, 0);
    for (int degree : space->degrees()) id.blocks_[degree] = Matrix::identity(space->dim(degree));
    return id;
}

GradedMap GradedMap::from_blocks(SpacePtr source, SpacePtr target, int degree, std::map<int, Matrix> blocks) {
    GradedMap f(std::move(source), std::move(target), degree);
    for (auto& [d, m] : blocks) {
        const std::size_t rows = f.target_->dim(d + degree);
        const std::size_t cols = f.source_->dim(d);
        if (m.rows() != rows || m.cols() != cols) {
            std::ostringstream msg;
            msg << "block at degree " << d << " is " << m.rows() << "x" << m.cols() << ", expected " << rows << "x"
                << cols;
            throw StructuralError(msg.str());
        }
        if (!m.is_zero()) f.blocks_.emplace(d, std::move(m));
    }
    return f;
}

GradedMap GradedMap::from_entries(SpacePtr source, SpacePtr target, int degree, const std::vector<Entry>& entries) {
    GradedMap f(std::move(source), std::move(target), degree);
    for (const auto& [from, to, coefficient] : entries) {
        const int from_degree = f.source_->degree_of(from);
        const int to_degree = f.target_->degree_of(to);
        if (to_degree != from_degree + degree) {
            std::ostringstream msg;
            msg << "entry " << from << " -> " << to << " goes from degree " << from_degree << " to degree "
                << to_degree << ", expected a map of degree " << degree;
            throw StructuralError(msg.str());
        }
        auto [it, inserted] = f.blocks_.try_emplace(from_degree, f.target_->dim(to_degree), f.source_->dim(from_degree));
        const std::size_t r = f.target_->index_of(to) - f.target_->offset(to_degree);
        const std::size_t c = f.source_->index_of(from) - f.source_->offset(from_degree);
        it->second(r, c) += coefficient;
    }
    f.prune();
    return f;
}

Matrix GradedMap::block(int source_degree) const {
    auto it = blocks_.find(source_degree);
    if (it != blocks_.end()) return it->second;
    return Matrix(target_->dim(source_degree + degree_), source_->dim(source_degree));
}

Scalar GradedMap::entry(const std::string& from, const std::string& to) const {
    const int from_degree = source_->degree_of(from);
    const int to_degree = target_->degree_of(to);
    if (to_degree != from_degree + degree_) return 0;
    auto it = blocks_.find(from_degree);
    if (it == blocks_.end()) return 0;
    return it->second(target_->index_of(to) - target_->offset(to_degree),
                      source_->index_of(from) - source_->offset(from_degree));
}

Vector GradedMap::apply(const Vector& global) const {
    if (global.size() != source_->total_dim()) throw StructuralError("vector length does not match source space");
    Vector out(target_->total_dim());
    for (const auto& [d, m] : blocks_) {
        const Vector image = m.apply(source_->restrict(global, d));
        const std::size_t off = target_->offset(d + degree_);
        for (std::size_t i = 0; i < image.size(); ++i) out[off + i] += image[i];
    }
    return out;
}

std::vector<GradedMap::Entry> GradedMap::entries() const {
    std::vector<Entry> out;
    for (const auto& [d, m] : blocks_) {
        const std::size_t src_off = source_->offset(d);
        const std::size_t tgt_off = target_->offset(d + degree_);
        for (std::size_t c = 0; c < m.cols(); ++c)
            for (std::size_t r = 0; r < m.rows(); ++r)
                if (!m(r, c).is_zero()) out.emplace_back(source_->label(src_off + c), target_->label(tgt_off + r), m(r, c));
    }
    return out;
}

void GradedMap::check_compatible(const GradedMap& o, const char* op) const {
    if (degree_ != o.degree_) {
        throw StructuralError(std::string(op) + " of maps of degree " + std::to_string(degree_) + " and " +
                              std::to_string(o.degree_));
    }
    if (!same_space(source_, o.source_) || !same_space(target_, o.target_)) {
        throw StructuralError(std::string(op) + " of maps between different spaces");
    }
}

void GradedMap::prune() {
    for (auto it = blocks_.begin(); it != blocks_.end();) {
        it = it->second.is_zero() ? blocks_.erase(it) : std::next(it);
    }
}

GradedMap& GradedMap::operator+=(const GradedMap& o) {
    check_compatible(o, "sum");
    for (const auto& [d, m] : o.blocks_) {
        auto it = blocks_.find(d);
        if (it == blocks_.end()) blocks_.emplace(d, m);
        else it->second += m;
    }
    prune();
    return *this;
}

GradedMap& GradedMap::operator-=(const GradedMap& o) {
    check_compatible(o, "difference");
    for (const auto& [d, m] : o.blocks_) {
        auto it = blocks_.find(d);
        if (it == blocks_.end()) blocks_.emplace(d, m * Scalar(-1));
        else it->second -= m;
    }
    prune();
    return *this;
}

GradedMap& GradedMap::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        blocks_.clear();
        return *this;
    }
    for (auto& [d, m] : blocks_) m *= s;
    return *this;
}

bool operator==(const GradedMap& a, const GradedMap& b) {
    return a.degree_ == b.degree_ && same_space(a.source_, b.source_) && same_space(a.target_, b.target_) &&
           a.blocks_ == b.blocks_;
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
    if (!same_space(g.target(), f.source())) {
        std::ostringstream msg;
        msg << "cannot compose: target of the inner map has degrees {";
        for (int d : g.target()->degrees()) msg << ' ' << d << ':' << g.target()->dim(d);
        msg << " } but source of the outer map has degrees {";
        for (int d : f.source()->degrees()) msg << ' ' << d << ':' << f.source()->dim(d);
        msg << " }";
        throw StructuralError(msg.str());
    }
    std::map<int, Matrix> blocks;
    for (const auto& [d, gm] : g.blocks()) {
        auto it = f.blocks().find(d + g.degree());
        if (it == f.blocks().end()) continue;
        blocks.emplace(d, it->second * gm);
    }
    return GradedMap::from_blocks(g.source(), f.target(), f.degree() + g.degree(), std::move(blocks));
}

GradedMap power(const GradedMap& f, unsigned n) {
    if (!f.is_endomorphism()) throw StructuralError("power of a map that is not an endomorphism");
    GradedMap out = GradedMap::identity(f.source());
    for (unsigned k = 0; k < n; ++k) out = compose(f, out);
    return out;
}

LinearReduction rank_kernel_image(const GradedMap& f, int degree) {
    LinearReduction out;
    const Matrix m = f.block(degree);
    if (m.cols() == 0) return out;
    out.kernel_basis = kernel_basis(m);
    if (m.rows() > 0) out.image_basis = column_space_basis(m);
    out.rank = out.image_basis.size();
    return out;
}

std::size_t quotient_dimension(const std::vector<Vector>& sub, const std::vector<Vector>& amb, std::size_t length) {
    const std::size_t amb_rank = span_rank(amb, length);
    std::vector<Vector> both = amb;
    both.insert(both.end(), sub.begin(), sub.end());
    if (span_rank(both, length) != amb_rank) throw StructuralError("image not contained in kernel");
    return amb_rank - span_rank(sub, length);
}

} // namespace ndga
