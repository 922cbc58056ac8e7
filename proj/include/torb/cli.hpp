#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "torb/numeric.hpp"
#include "torb/toric.hpp"

namespace torb::cli {

// Shared command flags. `seed` is accepted for interface stability; only the
// randomized test tooling consumes it.
struct Options {
    unsigned depth = 4;
    Int budget = 1000000;
    std::uint64_t seed = 0;
    std::string format = "json";  // "json" or "text"
};

// Everything cmd_analyze reports about one fan, precomputed so the
// serializers stay trivial and byte-deterministic.
struct AnalysisReport {
    std::size_t edges;
    std::size_t n;
    IntMatrix m_ij;
    Int m;
    unsigned s;
    Int q;
    CohomologyTable cohomology;
    struct PrimeVertex {
        Int p;
        Int nu_p;            // nu_p(m), the power itself
        std::size_t vertex;  // 1-based index from vertex_for_prime
    };
    std::vector<PrimeVertex> primes;       // one row per prime dividing m, ascending
    std::vector<LensDescriptor> vertices;  // one row per vertex, index order
};

AnalysisReport build_analysis_report(const CharacteristicData& data);
nlohmann::json report_json(const AnalysisReport& r);
std::string report_text(const AnalysisReport& r);

// Exit codes across all commands: 0 positive or neutral verdict, 1 negative
// verdict, 2 input error, 3 I/O error, 4 inconclusive, 5 budget exceeded.
int cmd_analyze(const std::string& fan_path, const Options& opt,
                std::ostream& out, std::ostream& err);
int cmd_split(const std::string& triple_path, const Options& opt,
              std::ostream& out, std::ostream& err);
int cmd_equiv(const std::string& path_a, const std::string& path_b,
              const Options& opt, std::ostream& out, std::ostream& err);
int cmd_oracle(const std::string& kind, const std::vector<std::string>& files,
               const Options& opt, std::ostream& out, std::ostream& err);

}  // namespace torb::cli
