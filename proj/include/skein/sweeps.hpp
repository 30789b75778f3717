#pragma once

#include "skein/sigma.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace skein {

struct SweepLine {
    std::string name;
    long passed = 0;
    long total = 0;
    bool ok() const { return passed == total; }
};

struct SweepReport {
    std::vector<SweepLine> lines;
    bool ok() const;
    SweepLine& line(const std::string& name);
    void record(const std::string& name, bool pass);
    void append(const SweepReport& other);
};

// Default primary bound per suite; SKEIN_VERIFY_RANGE or --range overrides it.
int default_range(const std::string& suite);

SweepReport sweep_families(int range);
SweepReport sweep_sigma(int range, int samples_per_nu1 = 200, std::uint64_t seed = 20250101);
SweepReport sweep_star(int range);
SweepReport sweep_starstar(int range);
SweepReport sweep_torsion(int range);

// (nu1, nu2) presentations covering nu0 in {-4,-3,-2,0,1,2}.
std::vector<std::pair<int, int>> two_fiber_sweep_set();

struct RandomWordSpec {
    int max_x = 4;
    int max_index = 5;
    int max_lambda = 4;
    int max_terms = 3;
};

SkeinVector random_skein_vector(std::mt19937_64& rng, const RandomWordSpec& spec);
Laurent random_laurent(std::mt19937_64& rng, int max_exp, int max_coeff, int max_terms);

// Word form of Sigma' coordinates: lambda^n and x_{nu1} lambda^n.
SkeinVector sigma_as_words(const SigmaVector& s, const Nu1Context& ctx);

}  // namespace skein
