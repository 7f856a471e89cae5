#pragma once

namespace posetrack {

// Full command-line surface (train / track / eval / render / bench / synth).
// Returns 0 on success, 1 on data errors, 2 on usage errors.
int cli_main(int argc, const char* const* argv);

} // namespace posetrack
