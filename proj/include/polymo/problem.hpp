#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polymo/chow.hpp"
#include "polymo/score.hpp"

namespace polymo {

// Parse failure with the path of the offending field, e.g.
// "$.hypersurfaces[0].J.2".
struct ParseError : std::runtime_error {
    ParseError(std::string path_, const std::string& message)
        : std::runtime_error("at " + path_ + ": " + message), path(std::move(path_)) {}
    std::string path;
};

enum class QueryKind { Validate, Ring, Product, Score, Intersect };

std::string query_kind_name(QueryKind k);

struct Query {
    QueryKind kind;
    std::vector<WVector> sigmas;              // product, score
    std::vector<DivisorClass> classes;        // intersect
    std::vector<std::string> hypersurfaces;   // score: labels, in insertion order
};

struct DeformationSpec {
    bool euler = true;  // "euler" shortcut; otherwise explicit coefficients
    std::vector<DeformedEuler::Coefficient> coefficients;
};

struct HypersurfaceSpec {
    std::string label;
    Polynomial f;
    std::optional<DivisorClass> declared_class;
    bool jacobian = true;        // "jacobian" shortcut for J
    std::vector<Polynomial> J;   // explicit entries when jacobian == false
};

struct ProblemFile {
    Fan fan;
    DeformationSpec deformation;
    std::vector<HypersurfaceSpec> hypersurfaces;
    std::vector<Query> queries;

    ToricVariety variety;      // built during parsing
    std::string input_digest;  // fnv1a64 over the raw input bytes
};

ProblemFile parse_problem(const std::string& path);
ProblemFile parse_problem_text(const std::string& text);

// Canonical serialization; reparsing it yields an identical structure.
nlohmann::json serialize_problem(const ProblemFile& pf);

struct RunOptions {
    // keep evaluating when m > n-3 (the warning always appears)
    bool allow_hypothesis_violations = true;
    // run only queries of this kind; Validate/Ring are synthesized if absent
    std::optional<QueryKind> only_kind;
};

struct Report {
    nlohmann::json document;
    bool validation_failed = false;  // some validate query reported failure
    bool query_errored = false;      // some query raised an error

    int exit_code() const { return validation_failed ? 2 : (query_errored ? 3 : 0); }
    std::string to_json() const;
    std::string to_text() const;
};

Report run_queries(const ProblemFile& pf, const RunOptions& options = {});

// 64-bit FNV-1a, rendered as fixed-width hex.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace polymo
