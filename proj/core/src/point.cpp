#include "planarize/point.hpp"

namespace planarize {

ProjPoint::ProjPoint(std::vector<QuadExt> coords) : coords_(std::move(coords)) {
    std::size_t first = coords_.size();
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        disc_ = merge_disc(disc_, coords_[i].disc());
        if (first == coords_.size() && !coords_[i].is_zero()) first = i;
    }
    if (first == coords_.size()) throw MathError(ErrorKind::ZeroInput, "all coordinates of a point are zero");
    const QuadExt inv = coords_[first].inverse();
    disc_ = 0;
    for (auto& c : coords_) {
        c *= inv;
        disc_ = merge_disc(disc_, c.disc());
    }
}

ProjPoint ProjPoint::rational(std::vector<Rational> coords) {
    std::vector<QuadExt> q(coords.begin(), coords.end());
    return ProjPoint(std::move(q));
}

std::vector<Rational> ProjPoint::rational_coords() const {
    std::vector<Rational> out;
    for (const auto& c : coords_) out.push_back(c.to_rational());
    return out;
}

ProjPoint ProjPoint::conjugate() const {
    std::vector<QuadExt> c;
    for (const auto& x : coords_) c.push_back(x.conjugate());
    return ProjPoint(std::move(c));
}

std::string ProjPoint::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ':';
        out += coords_[i].str();
    }
    return out + "]";
}

bool point_less(const ProjPoint& a, const ProjPoint& b) { return a.str() < b.str(); }

}  // namespace planarize
