#pragma once

#include <stdexcept>
#include <string>

namespace meshtopo {

/// Error categories raised by the toolkit. Each maps to one failure mode of
/// a public operation; tests match on the code rather than the message.
enum class errc {
    index_out_of_range,
    self_loop_edge,
    degenerate_face,
    position_count_mismatch,
    dimension_mismatch,
    not_edge_manifold,
    non_manifold_boundary,
    genus_undefined,
    invalid_filtration,
    mesh_not_closed,
    mesh_not_connected,
    mesh_not_manifold,
    mesh_not_orientable,
    cut_edge_on_boundary,
    empty_cut_on_positive_genus,
    degenerate_cut,
    invalid_spec,
    parse_error,
    missing_positions,
};

const char* errc_name(errc code);

class MeshError : public std::runtime_error {
public:
    MeshError(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw MeshError(code, message);
}

} // namespace meshtopo
