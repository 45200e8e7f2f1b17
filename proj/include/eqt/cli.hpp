#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "eqt/coeff.hpp"

namespace eqt {

struct Query {
    std::string source;  // path or builtin:<name>
    std::string ring = "Z";
    int max_degree = 4;
    int rank = 0;  // 0: take it from the file, else 1
    std::string side;  // ih-equivariant only: "t", "h" or empty for automatic
};

struct ResultRow {
    int degree;
    HomologyPresentation h;
};

struct ResultTable {
    std::string title;
    std::string ring;
    int max_degree = 0;
    std::uint64_t seed = 0;
    std::vector<ResultRow> rows;
    // cartan only: xi_i action H^n -> H^{n+2} on free parts
    struct Action {
        int i, degree;
        std::vector<std::vector<Scalar>> matrix;
    };
    std::vector<Action> actions;
};

// These throw ParseError, ValidationError or std::invalid_argument (bad ring).
ResultTable homology_table(const Query& q);
ResultTable cartan_table(const Query& q);
ResultTable pullback_table(const Query& q);
ResultTable ih_table(const Query& q);
ResultTable ih_equivariant_table(const Query& q);

void print_table(std::ostream& out, const ResultTable& t);

// exit codes: 0 success, 1 parse or usage error (and failed verification), 2 validation failure
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eqt
