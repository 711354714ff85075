#pragma once

#include "urforge/builder.hpp"
#include "urforge/certificate.hpp"
#include "urforge/colouring.hpp"
#include "urforge/placer.hpp"

#include <string>
#include <vector>

namespace urforge {

// Bounds for one game run. Every point appended to the ambient approximant
// after its first point counts against max_points, horizon growth included.
struct GameBudget {
    int max_points = 2000;
    int max_depth = 4;         // block recursion depth
    int attempts = 24;         // growth attempts per slot and colour
    int probe_candidates = 8;  // extensions tried by extendibility_probe
    int probe_samples = 3;     // orbit points required per probed extension
    int used = 0;

    int remaining() const { return max_points > used ? max_points - used : 0; }
};

// Source points are ambient ids below `horizon`; images are ambient ids.
struct OrbitColouring {
    Embedding embedding;
    int colour = 0;
    std::string branch;
    Certificate certificate;
};

// Copy of the first `horizon` points on which the orbit of p has one colour.
// p has rank min(D\{0}) and a prefix domain.
OrbitColouring monochromatize_rank1(Approximant& a, Colouring& chi, const TypeFn& p, int horizon, GameBudget& b);

struct UniformEnumeration {
    Embedding embedding;
    std::vector<Point> enumeration;  // images in source order
    Certificate certificate;
};

// Embeds the first `horizon` points, fixing the first `from`, so that every
// rank-r function over an enumeration prefix longer than `from` has
// realizers of one colour within the image.
UniformEnumeration uniformize(Approximant& a, Colouring& chi, Dist r, int from, int horizon, GameBudget& b);

struct Probe {
    enum class Verdict { witness, refuted, exhausted } verdict = Verdict::refuted;
    TypeFn g;                  // the extension, for a witness
    std::vector<Point> sample; // its realizers, all of colour i for a witness
    int tried = 0;
};

// Searches extensions g = p ∪ {b ↦ r⁻} in point order and judges each by its
// realizers (grown up to probe_samples). A refutation only covers the
// candidates tried.
Probe extendibility_probe(Approximant& a, Colouring& chi, const TypeFn& p, int colour, GameBudget& b);

struct CentralExtension {
    std::vector<Point> C;  // images in source order
    Embedding embedding;
    Certificate certificate;
};

// Copy of the first `horizon` points fixing dom(q) whose q-orbit has colour i.
CentralExtension central_extension(Approximant& a, Colouring& chi, const TypeFn& q, int colour, int horizon,
                                   GameBudget& b);

struct MonochromaticOrbit {
    TypeFn p;
    int colour = 0;
    std::vector<Point> X;  // images of the orbit points
    int horizon = 0;
    std::string branch;
    Certificate certificate;
};

// p = (0 ↦ max of the first block); grows a horizon holding at least
// `target` orbit points whose orbit passes copy_check at `depth`.
MonochromaticOrbit monochromatic_orbit(Approximant& a, Colouring& chi, int target, GameBudget& b, int depth = 1);

struct MonochromaticClasses {
    Embedding embedding;
    Dist m;
    std::vector<std::vector<Point>> shells;  // per class, images at distance m from its first point
    std::vector<int> colours;                // per class, -1 for an empty shell
    Certificate certificate;
};

// Embeds the first `horizon` points so that within each ∼m class the points
// at distance exactly m from its first point share one colour.
MonochromaticClasses monochromatic_classes(Approximant& a, Colouring& chi, int horizon, GameBudget& b);

struct MonochromaticCopy {
    int colour = 0;
    std::vector<Point> points;
    int depth = 0;
    Certificate certificate;
};

MonochromaticCopy find_monochromatic_copy(Approximant& a, Colouring& chi, int target, GameBudget& b, int depth = 1);
MonochromaticCopy find_monochromatic_copy(const DistanceSet& d, Colouring& chi, int target, GameBudget& b,
                                          std::uint64_t seed, int depth = 1);

}  // namespace urforge
