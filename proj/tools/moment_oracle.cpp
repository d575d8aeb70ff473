// Independent brute-force oracle for the d=2, n=1 Berezin moment
// E[<A>(q) q] with A = diag(1,0): samples Haar rank-1 projectors from
// normalized Gaussian 2-vectors directly, bypassing the library's sampling
// and quantization paths, and records the 10^7-sample estimate for the
// acceptance suite to cross-check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>

#include <json.hpp>

namespace {

using Complex = std::complex<double>;

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double uniform() { return double((next() >> 11) + 1) * 0x1.0p-53; }
  Complex gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-std::log(u1));
    return {r * std::cos(2 * M_PI * u2), r * std::sin(2 * M_PI * u2)};
  }
};

}  // namespace

int main(int argc, char** argv) {
  const std::string out_path =
      argc > 1 ? argv[1] : "berezin_moment_oracle.json";
  const std::uint64_t seed = argc > 2 ? std::stoull(argv[2]) : 271828;
  const std::int64_t samples = argc > 3 ? std::stoll(argv[3]) : 10000000;

  SplitMix rng{seed};
  Complex sum[2][2] = {};
  double sumsq[2][2] = {};
  for (std::int64_t k = 0; k < samples; ++k) {
    Complex v0 = rng.gaussian();
    Complex v1 = rng.gaussian();
    const double nrm = std::sqrt(std::norm(v0) + std::norm(v1));
    v0 /= nrm;
    v1 /= nrm;
    // q = v v^dagger, f = Tr(q A) = |v0|^2, accumulate 2 f q (mass d/n = 2).
    const double f = std::norm(v0);
    const Complex q[2][2] = {{Complex(std::norm(v0), 0), v0 * std::conj(v1)},
                             {v1 * std::conj(v0), Complex(std::norm(v1), 0)}};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const Complex x = 2.0 * f * q[i][j];
        sum[i][j] += x;
        sumsq[i][j] += std::norm(x);
      }
    }
  }

  nlohmann::ordered_json j;
  j["seed"] = seed;
  j["samples"] = samples;
  double var_total = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) {
      const Complex mean = sum[i][k] / double(samples);
      j["estimate"][i][k] = {mean.real(), mean.imag()};
      var_total += sumsq[i][k] / double(samples) - std::norm(mean);
    }
  }
  j["clt_3sigma"] = 3.0 * std::sqrt(var_total / double(samples));
  j["analytic"] = {{2.0 / 3.0, 0.0}, {0.0, 1.0 / 3.0}};

  std::ofstream out(out_path);
  out << j.dump(2) << "\n";
  std::cout << "oracle written to " << out_path << "\n";
  return 0;
}
