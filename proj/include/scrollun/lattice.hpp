#pragma once

#include <string>
#include <vector>

namespace scrollun {

// Integer intersection lattice of an iterated blow-up of a Hirzebruch
// surface F_d, in the basis {Delta0, Gamma, E_1, ..., E_r} of total
// transforms: Delta0^2 = -d, Gamma^2 = 0, Delta0.Gamma = 1, E_i.E_j =
// -delta_ij, mixed products 0. Each blow-up records its parent exceptional
// (or -1) so strict transforms can be formed.
struct SurfaceModel {
    int d = 0;
    std::vector<int> parents;

    std::size_t num_exceptionals() const { return parents.size(); }
};

struct DivClass {
    long delta0 = 0, gamma = 0;
    std::vector<long> e;
};

SurfaceModel hirzebruch(int d);

// Blow up a point; parent >= 0 places it on that exceptional (infinitely
// near). Returns the new exceptional's index.
int blow_up(SurfaceModel& model, int parent = -1);

DivClass make_class(const SurfaceModel& model, long delta0, long gamma,
                    std::vector<long> e = {});
DivClass exceptional_class(const SurfaceModel& model, int i);
// Total transform minus the exceptionals of the blow-ups centred on E_i.
DivClass strict_exceptional(const SurfaceModel& model, int i);
DivClass canonical_class(const SurfaceModel& model);

long intersect(const SurfaceModel& model, const DivClass& a, const DivClass& b);

// The unprojection blow-up pattern on the lattice: for points P_i with multiplicity
// k_i on a fixed fibre, blow a tower of k_i points (each subsequent one on
// the previous exceptional and on the strict transform of the fibre).
struct ChainReport {
    long gamma_hat_sq = 0;
    std::vector<std::vector<long>> chains;       // tower self-intersections, ending in -1
    std::vector<std::string> singularities;      // "1/k(1,1)" then "A<j>" per chain
    SurfaceModel model;
    DivClass gamma_hat;
};
ChainReport unprojection_chain(int d, const std::vector<std::pair<int, bool>>& D);

// Blow up a point of a fibre, blow down the fibre's strict transform:
// d+1 on the negative section, d-1 off it; from F_0 both land on F_1.
int elementary_transformation(int d, bool on_delta0);

struct HorikawaReport {
    int m = 0, n = 0;
    int pg = 0;
    int Ksq = 0;
    long L_sq = 0;
    long L_dot_gamma_hat = 0;
    long gamma_hat_sq = 0;
    bool a1_contraction_consistent = false;  // gamma_hat is a (-2)-curve
};
HorikawaReport horikawa_numerology(int m, int n, bool infinitely_near = false);

}  // namespace scrollun
