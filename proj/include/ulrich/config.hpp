#pragma once

namespace ulrich {

// Runtime limits and table rendering knobs. The defaults cover every ring
// the engine is validated on; n_max bounds both quadric dimension and the
// total dimension of product rings.
struct EngineConfig {
    int n_max = 16;
    int table_width = 10;
};

EngineConfig& engine_config();

} // namespace ulrich
