#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace slfq {

// Direction of one tail edge. Out points away from the core (the edge at
// depth d runs depth d-1 -> depth d), In points toward it.
enum class Dir : char { Out = 'O', In = 'I' };

// Eventually periodic orientation word of an infinite linear tail. The
// edge at depth d >= 1 has direction at(d). The normal form has minimal
// period and then minimal preperiod; values may hold a non-normalized
// word so validation can report it instead of silently fixing it.
class TailWord {
 public:
  TailWord() : per_("O") {}
  TailWord(std::string preperiod, std::string period);

  // Entry point for untrusted text: rejects empty periods and characters
  // outside {I, O}.
  static std::optional<TailWord> parse(const std::string& preperiod,
                                       const std::string& period);

  const std::string& preperiod() const { return pre_; }
  const std::string& period() const { return per_; }

  Dir at(int depth) const;  // depth >= 1
  bool normalized() const;
  TailWord normal_form() const;
  TailWord flipped() const;        // swap In <-> Out, renormalized trivially
  TailWord shifted(int d) const;   // drop the first d letters, renormalized

  bool eventually_constant() const;
  bool eventually_out() const;
  bool eventually_in() const;

  bool operator==(const TailWord& o) const = default;

 private:
  std::string pre_;
  std::string per_;
};

struct Arrow {
  std::string id;
  std::string from;
  std::string to;
  bool operator==(const Arrow& o) const = default;
};

struct FiniteQuiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  bool has_vertex(const std::string& v) const;
};

struct TailSpec {
  std::string attach;
  TailWord word;
};

// Finite encoding of an infinite quiver: an acyclic finite core plus
// finitely many infinite linear tails.
struct QuiverPresentation {
  FiniteQuiver core;
  std::vector<TailSpec> tails;
};

// Generated names for tail vertices and edges. Depth counts from 1; the
// depth-0 position is the attachment vertex itself.
std::string tail_vertex_name(int tail, int depth);
std::string tail_arrow_id(int tail, int depth);

// Inverse of tail_vertex_name for names referring to the first n_tails
// tails at depth >= 1; nullopt for anything else.
std::optional<std::pair<int, int>> parse_tail_vertex_name(const std::string& name,
                                                          int n_tails);

struct ValidationReport {
  // Structural errors mean the input is not even a well-formed encoding
  // (dangling arrow endpoints); violations are semantic.
  std::vector<std::string> structural;
  std::vector<std::string> violations;
  bool well_formed() const { return structural.empty(); }
  bool valid() const { return structural.empty() && violations.empty(); }
};

// Flags duplicate identifiers, directed core cycles, missing tail
// attachments, non-normalized tail words, and identifier collisions with
// the generated tail names.
ValidationReport validate_presentation(const QuiverPresentation& qp);

// Literal equality of the encodings (same vertex and arrow lists, same
// tails in the same order).
bool same_presentation(const QuiverPresentation& a, const QuiverPresentation& b);

// Same core and tails with every arrow and every tail direction reversed.
QuiverPresentation opposite(const QuiverPresentation& qp);

// Moves the first d vertices of one tail into the core, shifting and
// renormalizing the word. Promoted vertices get fresh names.
QuiverPresentation reroot(const QuiverPresentation& qp, int tail, int d);

}  // namespace slfq
