#pragma once

#include "eqt/em_ops.hpp"

namespace eqt {

// BG_n = G_0 x ... x G_{n-1}
class BarSpace : public RawSpace {
public:
    explicit BarSpace(GroupPtr G) : G_(std::move(G)) {}

    Key raw_face(const Key& x, int n, int i) const override;
    Key raw_deg(const Key& x, int n, int i) const override;
    bool finite() const override { return G_->finite(); }
    std::vector<Simplex> generators(int n) const override;
    std::string name() const override { return "B" + G_->name(); }
    std::string describe(const Simplex& s) const override;

    std::vector<Key> split(const Key& raw) const;
    static Key join(const std::vector<Key>& parts);
    // τ_BG(b) = g_{n-1}
    Key tau(const Simplex& b) const;
    const SimplicialGroup& group() const { return *G_; }
    GroupPtr group_ptr() const { return G_; }

private:
    GroupPtr G_;
};

// EG = BG x_τ G with the right action by fibre translation
class UniversalBundle {
public:
    explicit UniversalBundle(GroupPtr G);

    std::shared_ptr<const BarSpace> base() const { return BG_; }
    std::shared_ptr<const TwistedProduct> total() const { return EG_; }
    const SimplicialGroup& group() const { return *G_; }
    GroupPtr group_ptr() const { return G_; }

    Simplex basepoint() const;
    Simplex project(const Simplex& e) const { return EG_->components(e).first; }
    Simplex fibre_inclusion(const Simplex& g) const;
    // e . h, h raw of the same degree
    Simplex right_act(const Simplex& e, const Key& h) const;
    // EG_n = BG_{n+1}
    Key to_bar(const Simplex& e) const;
    Simplex from_bar(const Key& raw, int n) const;
    Simplex s_tilde(const Simplex& e) const;
    Chain cone(const Chain& c) const;
    SpaceOverBase over_base() const;

private:
    GroupPtr G_;
    std::shared_ptr<BarSpace> BG_;
    std::shared_ptr<TwistedProduct> EG_;
};

}  // namespace eqt
