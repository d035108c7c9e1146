#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbowkit/braid.hpp"

namespace rainbowkit {

/// One elementary rewriting step on a braid word. All moves preserve the
/// closure's link type, so a log ending in the empty word witnesses that the
/// source is a fully destabilizable braided unlink.
struct Move {
  enum class Kind {
    kFreeCancel,   // remove the inverse pair at (pos, pos+1)
    kFreeInsert,   // insert (letter, -letter) at pos
    kRelation,     // rewrite the length-3 window at pos by the braid relation
    kFarCommute,   // swap commuting letters at (pos, pos+1), |i-j| >= 2
    kCycleLeft,    // move the front letter to the back (conjugation)
    kConjugate,    // prepend -letter and append letter (conjugation)
    kDestabilize,  // remove the unique +-(b-1) letter; strand count drops
  };

  Kind kind;
  int pos = 0;
  int letter = 0;

  static Move free_cancel(int pos) { return {Kind::kFreeCancel, pos, 0}; }
  static Move free_insert(int pos, int letter) {
    return {Kind::kFreeInsert, pos, letter};
  }
  static Move relation(int pos) { return {Kind::kRelation, pos, 0}; }
  static Move far_commute(int pos) { return {Kind::kFarCommute, pos, 0}; }
  static Move cycle_left() { return {Kind::kCycleLeft, 0, 0}; }
  static Move conjugate_by(int letter) {
    return {Kind::kConjugate, 0, letter};
  }
  static Move destabilize() { return {Kind::kDestabilize, 0, 0}; }

  bool operator==(const Move&) const = default;
};

std::string move_name(Move::Kind kind);

/// Applies one move, throwing std::invalid_argument when the move's local
/// pattern does not match the word.
BraidWord apply_move(const BraidWord& w, const Move& m);

/// Replayable witness that a braid word reduces to the empty word (the
/// crossingless braid on `final_components` strands).
struct DestabilizationCertificate {
  BraidWord source;
  std::vector<Move> moves;
  int final_components = 0;

  /// Mirror witness: certifies source.inverse() with the same move skeleton.
  DestabilizationCertificate mirrored() const;
};

struct ReplayResult {
  bool ok = false;
  std::string error;
  int final_strands = 0;
};

/// Replays the move log from the source word; ok iff every move applies and
/// the run ends in the empty word on final_components strands.
ReplayResult replay(const DestabilizationCertificate& cert);

/// Serialization: one line per move, preceded by the source word line.
std::string print_certificate(const DestabilizationCertificate& cert);
DestabilizationCertificate parse_certificate(const std::string& text);

}  // namespace rainbowkit
