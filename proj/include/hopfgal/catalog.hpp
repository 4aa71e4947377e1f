#pragma once

#include "hopfgal/gauge.hpp"

namespace hopfgal::catalog {

struct UnknownExample : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One curated example: Hopf algebra, named forms, optional cocycle, comodule
// algebra / extension, default working degree, and the expected verdicts the
// pipeline reproduces.
struct ExampleBundle {
    std::string name;
    HopfPtr H;
    std::map<std::string, FormPtr> forms;  // named R-forms ("R", "R_q", "R_lambda", ...)
    std::string primary_form = "R";
    FormPtr gamma;                          // 2-cocycle, when the example twists
    std::optional<ComoduleAlgebra> A;
    std::optional<Extension> ext;
    int default_degree = 3;
    int gamma_degree = 3;   // verification degree used to build the twist context
    int axiom_degree = 3;   // bialgebra axiom sweep
    int braided_degree = 3; // braided suite
    int qc_degree = 3;      // quasi-commutativity sweep
    int galois_degree = 3;  // translation-map suite
    int gauge_degree = 3;   // gauge verification sweeps
    int qmap_degree = 2;    // Q-map suite
    std::map<std::string, std::string> expected;  // check id -> expected verdict
    int torus_rank = 0;                           // for torus_theta(n)
};

// identifiers: zmod2_point, kz_rq, torus_theta(n), quantum_plane_glq2,
// so2n_twisted(n), graded_strong, uq2_presentation
ExampleBundle build_example(const std::string& name_with_args);
std::vector<std::string> example_names();

// gamma(t_j (x) t_k) on the torus: the formal phase s_{jk} (0-based indices)
Scalar torus_phase(int j, int k);

// commutative quotient presentation with echelonized filtered relations,
// confluent through completion_degree
PresPtr commutative_quotient(const std::string& name, std::vector<Generator> gens,
                             const std::vector<Element>& relations, int rule_degree,
                             int oracle_degree);

// per-subcommand suites (deterministic report ordering)
Report suite_check_form(const ExampleBundle& b, const std::string& form_name,
                        const std::string& mode, int degree);
Report suite_check_hopf(const ExampleBundle& b, int degree, bool twisted);
Report suite_qc(const ExampleBundle& b, const std::string& form_name, int degree);
Report suite_braided(const ExampleBundle& b, int degree);
Report suite_twist(const ExampleBundle& b, int degree);
Report suite_canonical(const ExampleBundle& b, int degree);
Report suite_galois(const ExampleBundle& b, int degree);
Report suite_gauge(const ExampleBundle& b, int degree);
Report suite_diagram(const ExampleBundle& b, int degree);
Report suite_lint(const ExampleBundle& b, int degree);
// the whole pipeline compared against the expected map
Report run_example(const ExampleBundle& b, int degree);

}  // namespace hopfgal::catalog
