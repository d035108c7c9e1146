#include "rainbowkit/certificate.hpp"

#include <sstream>

namespace rainbowkit {

std::string move_name(Move::Kind kind) {
  switch (kind) {
    case Move::Kind::kFreeCancel: return "cancel";
    case Move::Kind::kFreeInsert: return "insert";
    case Move::Kind::kRelation: return "relation";
    case Move::Kind::kFarCommute: return "commute";
    case Move::Kind::kCycleLeft: return "cycle";
    case Move::Kind::kConjugate: return "conjugate";
    case Move::Kind::kDestabilize: return "destabilize";
  }
  return "?";
}

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("move does not apply: " + what);
}

int sign_of(int l) { return l > 0 ? 1 : -1; }
int index_of(int l) { return l > 0 ? l : -l; }

// Braid-relation rewrite of a window (a, b, c) with indices (i, j, i),
// |i-j| = 1. Valid sign patterns and images, s in {+1,-1}:
//   (s i, s j, s i)  -> (s j, s i, s j)
//   (s i, s j, -s i) -> (-s j, s i, s j)
//   (-s i, s j, s i) -> (s j, s i, -s j)
// The alternating pattern (s i, -s j, s i) admits no single relation.
bool relation_rewrite(int a, int b, int c, int out[3]) {
  int i = index_of(a), j = index_of(b);
  if (index_of(c) != i || (i - j != 1 && j - i != 1)) return false;
  int sa = sign_of(a), sb = sign_of(b), sc = sign_of(c);
  if (sa == sb && sb == sc) {
    out[0] = sa * j; out[1] = sa * i; out[2] = sa * j;
    return true;
  }
  if (sa == sb && sc == -sa) {
    out[0] = -sa * j; out[1] = sa * i; out[2] = sa * j;
    return true;
  }
  if (sb == sc && sa == -sb) {
    out[0] = sb * j; out[1] = sb * i; out[2] = -sb * j;
    return true;
  }
  return false;
}

}  // namespace

BraidWord apply_move(const BraidWord& w, const Move& m) {
  const std::vector<int>& ls = w.letters();
  const int n = w.size();
  std::vector<int> out;
  switch (m.kind) {
    case Move::Kind::kFreeCancel: {
      if (m.pos < 0 || m.pos + 1 >= n) bad("cancel position");
      if (ls[m.pos] != -ls[m.pos + 1]) bad("cancel pair");
      out = ls;
      out.erase(out.begin() + m.pos, out.begin() + m.pos + 2);
      return BraidWord(w.strands(), std::move(out));
    }
    case Move::Kind::kFreeInsert: {
      if (m.pos < 0 || m.pos > n) bad("insert position");
      out = ls;
      out.insert(out.begin() + m.pos, {m.letter, -m.letter});
      return BraidWord(w.strands(), std::move(out));
    }
    case Move::Kind::kRelation: {
      if (m.pos < 0 || m.pos + 2 >= n) bad("relation position");
      int img[3];
      if (!relation_rewrite(ls[m.pos], ls[m.pos + 1], ls[m.pos + 2], img))
        bad("relation pattern");
      out = ls;
      out[m.pos] = img[0];
      out[m.pos + 1] = img[1];
      out[m.pos + 2] = img[2];
      return BraidWord(w.strands(), std::move(out));
    }
    case Move::Kind::kFarCommute: {
      if (m.pos < 0 || m.pos + 1 >= n) bad("commute position");
      int di = index_of(ls[m.pos]) - index_of(ls[m.pos + 1]);
      if (di < 2 && di > -2) bad("commute distance");
      out = ls;
      std::swap(out[m.pos], out[m.pos + 1]);
      return BraidWord(w.strands(), std::move(out));
    }
    case Move::Kind::kCycleLeft: {
      if (n == 0) bad("cycle on empty word");
      out.assign(ls.begin() + 1, ls.end());
      out.push_back(ls.front());
      return BraidWord(w.strands(), std::move(out));
    }
    case Move::Kind::kConjugate: {
      out.reserve(n + 2);
      out.push_back(-m.letter);
      out.insert(out.end(), ls.begin(), ls.end());
      out.push_back(m.letter);
      return BraidWord(w.strands(), std::move(out));
    }
    case Move::Kind::kDestabilize: {
      if (w.strands() < 2) bad("destabilize on 1 strand");
      int top = w.strands() - 1;
      int found = -1;
      for (int p = 0; p < n; ++p) {
        if (index_of(ls[p]) == top) {
          if (found >= 0) bad("destabilize: top letter not unique");
          found = p;
        }
      }
      if (found < 0) bad("destabilize: no top letter");
      out = ls;
      out.erase(out.begin() + found);
      return BraidWord(w.strands() - 1, std::move(out));
    }
  }
  bad("unknown move");
}

ReplayResult replay(const DestabilizationCertificate& cert) {
  ReplayResult r;
  BraidWord w = cert.source;
  try {
    for (const Move& m : cert.moves) w = apply_move(w, m);
  } catch (const std::exception& e) {
    r.error = e.what();
    return r;
  }
  if (!w.empty()) {
    r.error = "replay did not end in the empty word";
    return r;
  }
  if (w.strands() != cert.final_components) {
    r.error = "final strand count does not match final_components";
    return r;
  }
  r.ok = true;
  r.final_strands = w.strands();
  return r;
}

DestabilizationCertificate DestabilizationCertificate::mirrored() const {
  DestabilizationCertificate out;
  out.source = source.inverse();
  out.final_components = final_components;
  BraidWord w = source;
  for (const Move& m : moves) {
    const int n = w.size();
    switch (m.kind) {
      case Move::Kind::kFreeCancel:
        out.moves.push_back(Move::free_cancel(n - 2 - m.pos));
        break;
      case Move::Kind::kFreeInsert:
        out.moves.push_back(Move::free_insert(n - m.pos, m.letter));
        break;
      case Move::Kind::kRelation:
        out.moves.push_back(Move::relation(n - 3 - m.pos));
        break;
      case Move::Kind::kFarCommute:
        out.moves.push_back(Move::far_commute(n - 2 - m.pos));
        break;
      case Move::Kind::kCycleLeft:
        // The mirror of a left rotation is a right rotation.
        for (int k = 0; k + 1 < n; ++k)
          out.moves.push_back(Move::cycle_left());
        break;
      case Move::Kind::kConjugate:
        out.moves.push_back(m);
        break;
      case Move::Kind::kDestabilize:
        out.moves.push_back(m);
        break;
    }
    w = apply_move(w, m);
  }
  return out;
}

std::string print_certificate(const DestabilizationCertificate& cert) {
  std::ostringstream os;
  os << "source: " << cert.source.str() << '\n';
  os << "components: " << cert.final_components << '\n';
  for (const Move& m : cert.moves) {
    os << move_name(m.kind);
    switch (m.kind) {
      case Move::Kind::kFreeCancel:
      case Move::Kind::kRelation:
      case Move::Kind::kFarCommute:
        os << ' ' << m.pos;
        break;
      case Move::Kind::kFreeInsert:
        os << ' ' << m.pos << ' ' << m.letter;
        break;
      case Move::Kind::kConjugate:
        os << ' ' << m.letter;
        break;
      default:
        break;
    }
    os << '\n';
  }
  return os.str();
}

DestabilizationCertificate parse_certificate(const std::string& text) {
  DestabilizationCertificate cert;
  std::istringstream is(text);
  std::string line;
  bool have_source = false, have_components = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "source:") {
      std::string rest;
      std::getline(ls, rest);
      cert.source = parse_braid(rest);
      have_source = true;
    } else if (tok == "components:") {
      ls >> cert.final_components;
      have_components = true;
    } else if (tok == "cancel") {
      int p; ls >> p;
      cert.moves.push_back(Move::free_cancel(p));
    } else if (tok == "insert") {
      int p, l; ls >> p >> l;
      cert.moves.push_back(Move::free_insert(p, l));
    } else if (tok == "relation") {
      int p; ls >> p;
      cert.moves.push_back(Move::relation(p));
    } else if (tok == "commute") {
      int p; ls >> p;
      cert.moves.push_back(Move::far_commute(p));
    } else if (tok == "cycle") {
      cert.moves.push_back(Move::cycle_left());
    } else if (tok == "conjugate") {
      int l; ls >> l;
      cert.moves.push_back(Move::conjugate_by(l));
    } else if (tok == "destabilize") {
      cert.moves.push_back(Move::destabilize());
    } else {
      throw std::invalid_argument("certificate: unknown move `" + tok + "`");
    }
  }
  if (!have_source || !have_components)
    throw std::invalid_argument("certificate: missing header lines");
  return cert;
}

}  // namespace rainbowkit
