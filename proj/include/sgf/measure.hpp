#pragma once

#include "sgf/rational.hpp"
#include "sgf/schur.hpp"
#include "sgf/signature.hpp"

#include <map>
#include <string>

namespace sgf {

// Finitely supported measure on signatures of one fixed length, exact rational
// weights.  Total mass is 1, or 1 - truncation_mass for rows of truncated kernels
// (geometric / Poisson steps); the deficit is always recorded, never dropped.
class SignatureMeasure {
  public:
    using Atoms = std::map<Signature, Rat>;

    explicit SignatureMeasure(int length) : length_(length) {}

    static SignatureMeasure delta(const Signature& lambda) {
        SignatureMeasure m(lambda.length());
        m.atoms_[lambda] = 1;
        return m;
    }

    int length() const { return length_; }
    const Atoms& atoms() const { return atoms_; }
    const Rat& truncation_mass() const { return truncation_mass_; }
    void set_truncation_mass(const Rat& eps) { truncation_mass_ = eps; }

    void add(const Signature& s, const Rat& w) {
        if (s.length() != length_)
            throw validation_error("SignatureMeasure: atom length mismatch");
        if (w == 0) return;
        auto it = atoms_.find(s);
        if (it == atoms_.end()) {
            atoms_.emplace(s, w);
        } else {
            it->second += w;
            if (it->second == 0) atoms_.erase(it);
        }
    }

    Rat weight(const Signature& s) const {
        auto it = atoms_.find(s);
        return it == atoms_.end() ? Rat(0) : it->second;
    }

    Rat total_mass() const {
        Rat t = 0;
        for (const auto& [s, w] : atoms_) t += w;
        return t;
    }

    // 1 when exact; total observed mass must equal 1 - truncation_mass.
    bool is_normalized() const { return total_mass() + truncation_mass_ == 1; }

    std::size_t size() const { return atoms_.size(); }

  private:
    int length_;
    Atoms atoms_;
    Rat truncation_mass_ = 0;
};

std::string measure_to_json(const SignatureMeasure& m);
SignatureMeasure measure_from_json(const std::string& text);

}  // namespace sgf
