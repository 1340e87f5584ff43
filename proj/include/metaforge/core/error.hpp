#pragma once

#include <stdexcept>
#include <string>

namespace metaforge {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

#define METAFORGE_ERROR_KIND(name)                                        \
    struct name : error {                                                 \
        explicit name(const std::string& what = #name) : error(what) {}  \
    }

METAFORGE_ERROR_KIND(no_square_root);
METAFORGE_ERROR_KIND(no_solution);
METAFORGE_ERROR_KIND(division_by_zero);
METAFORGE_ERROR_KIND(precision_exhausted);
METAFORGE_ERROR_KIND(dimension_mismatch);
METAFORGE_ERROR_KIND(not_similitude);
METAFORGE_ERROR_KIND(bad_spec);
METAFORGE_ERROR_KIND(not_diagonal);
METAFORGE_ERROR_KIND(bad_parameter);
METAFORGE_ERROR_KIND(invalid_eichler);
METAFORGE_ERROR_KIND(not_hyperbolic);
METAFORGE_ERROR_KIND(degenerate_form);
METAFORGE_ERROR_KIND(degenerate_input);
METAFORGE_ERROR_KIND(wrong_case);
METAFORGE_ERROR_KIND(not_applicable);
METAFORGE_ERROR_KIND(split_algebra);
METAFORGE_ERROR_KIND(no_witness);
METAFORGE_ERROR_KIND(not_in_d4);
METAFORGE_ERROR_KIND(not_isometry);
METAFORGE_ERROR_KIND(singular_matrix);
METAFORGE_ERROR_KIND(not_compatible);
METAFORGE_ERROR_KIND(bad_signature);
METAFORGE_ERROR_KIND(not_vanishing_on_k);
METAFORGE_ERROR_KIND(context_unavailable);
METAFORGE_ERROR_KIND(config_error);

#undef METAFORGE_ERROR_KIND

inline void check(bool cond, const char* msg) {
    if (!cond) throw error(msg);
}

}  // namespace metaforge
