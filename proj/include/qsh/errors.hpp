#ifndef QSH_ERRORS_HPP
#define QSH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsh
{

// Base class for every error raised by the library. The concrete types below
// let callers (and the CLI) distinguish contract violations by kind.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

#define QSH_DEFINE_ERROR(name)                                                                                         \
    class name : public error                                                                                          \
    {                                                                                                                  \
    public:                                                                                                            \
        using error::error;                                                                                            \
    }

QSH_DEFINE_ERROR(invalid_composition);
QSH_DEFINE_ERROR(not_a_refinement);
QSH_DEFINE_ERROR(not_a_partition);
QSH_DEFINE_ERROR(basis_mismatch);
QSH_DEFINE_ERROR(degree_mismatch);
QSH_DEFINE_ERROR(degree_cap_exceeded);
QSH_DEFINE_ERROR(not_invertible);
QSH_DEFINE_ERROR(nonvanishing_at_empty);
QSH_DEFINE_ERROR(wrong_value_at_empty);
QSH_DEFINE_ERROR(singular_character);
QSH_DEFINE_ERROR(zero_prefix_sum);
QSH_DEFINE_ERROR(not_normalized);
QSH_DEFINE_ERROR(not_a_shuffle_character);
QSH_DEFINE_ERROR(even_size_unsupported);
QSH_DEFINE_ERROR(not_a_character);
QSH_DEFINE_ERROR(not_an_infinitesimal_character);
QSH_DEFINE_ERROR(invalid_structure);
QSH_DEFINE_ERROR(parse_error);
QSH_DEFINE_ERROR(unknown_basis);

#undef QSH_DEFINE_ERROR

} // namespace qsh

#endif
