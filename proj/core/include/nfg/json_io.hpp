#ifndef NFG_JSON_IO_HPP
#define NFG_JSON_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "nfg/game.hpp"

namespace nfg {

// Game file format: a single JSON object with fields
//   players      array of strings
//   strategies   array of arrays of strings, one per player
//   orientation  "maximize" or "minimize"
//   payoffs      nested arrays, one nesting level per player in order;
//                innermost arrays hold one number per player
// Payoffs are in source orientation (costs for "minimize").

/// Parses a game from JSON text. Throws ParseError with the offending field
/// named in the message.
NormalFormGame game_from_json_text(std::string_view text);

/// Serializes in source orientation. `indent` < 0 emits compact one-line
/// JSON.
std::string game_to_json_text(const NormalFormGame& game, int indent = -1);

/// Loads a game file. Throws FileNotFound or ParseError.
NormalFormGame read_game_file(const std::filesystem::path& path);

void write_game_file(const std::filesystem::path& path,
                     const NormalFormGame& game);

}  // namespace nfg

#endif  // NFG_JSON_IO_HPP
