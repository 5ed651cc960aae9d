#include "transcription.hpp"

#include <exception>

#include "ccl/opsem.hpp"
#include "ccl/syntax.hpp"

namespace ccl::testing {

namespace {

using std::string;

TranscriptionCase val(string rule, string input, bool stable) { return {std::move(rule), std::move(input), std::nullopt, stable}; }

TranscriptionCase to(string rule, string input, string expected, bool stable) {
  return {std::move(rule), std::move(input), std::move(expected), stable};
}

string paren(const string& s) { return "(" + s + ")"; }

// coe at a V line whose source is a dimension name; placeholders depend on
// both the source name t and the line variable x.
TranscriptionCase ua_coe_name() {
  auto A = [](const string& t, const string& x) { return "(dapp (dapp A " + t + ") " + x + ")"; };
  auto B = [](const string& t, const string& x) { return "(dapp (dapp B " + t + ") " + x + ")"; };
  auto E = [](const string& t, const string& x) { return "(dapp (dapp E " + t + ") " + x + ")"; };
  auto line = [&](const string& t) { return "(x. V x " + A(t, "x") + " " + B(t, "x") + " " + E(t, "x") + ")"; };
  auto M = [](const string& t) { return "(dapp M " + t + ")"; };
  auto O = [&](const string& t, const string& eps, const string& w) {
    return "(Vproj " + w + " (coe " + line(t) + " " + eps + " ~> " + w + " " + M(t) + ") (fst " + E(t, w) + "))";
  };
  auto P = [&](const string& t, const string& x) {
    return "(com (x. " + B(t, "x") + ") " + t + " ~> " + x + " (Vproj " + t + " " + M(t) + " (fst " + E(t, t) +
           ")) [" + t + "=0 w. " + O(t, "0", "w") + "] [" + t + "=1 w. " + O(t, "1", "w") + "])";
  };
  auto Q = [&](const string& eps, const string& a) {
    return "(pair (coe (t. " + A("t", "0") + ") " + eps + " ~> t " + a + ") (dlam z. com (t. " + B("t", "0") + ") " +
           eps + " ~> t " + P(eps, "0") + " [z=0 t. app (fst " + E("t", "0") + ") (coe (t. " + A("t", "0") + ") " +
           eps + " ~> t " + a + ")] [z=1 t. " + P("t", "0") + "]))";
  };
  string back = "(coe " + line("1") + " 1 ~> 0 " + M("1") + ")";
  string R = "(dapp (app (app (snd (app (snd " + E("t", "0") + ") " + P("t", "0") + ")) " + Q("0", M("0")) + ") " +
             Q("1", back) + ") t)";
  string T = "[t=0 _. " + O("t", "0", "s") + "] [t=1 _. " + O("t", "1", "s") + "] [t=s _. Vproj s " + M("t") +
             " (fst " + E("t", "s") + ")] [s=0 z. dapp (snd " + R + ") z]";
  return to("ua/coe-name", "coe " + line("t") + " t ~> s " + M("t"),
            "Vin s (fst " + R + ") (hcom " + B("t", "s") + " 1 ~> 0 " + P("t", "s") + " " + T + ")", false);
}

TranscriptionCase ua_coe_one() {
  string line = "(x. V x (dapp A x) (dapp B x) (dapp E x))";
  string cn = "(coe (x. dapp B x) 1 ~> s N)";
  string O = "(fst (app (snd (dapp E s)) " + cn + "))";
  return to("ua/coe-1", "coe " + line + " 1 ~> s N",
            "Vin s (fst " + O + ") (hcom (dapp B s) 1 ~> 0 " + cn + " [s=0 y. dapp (snd " + O + ") y] [s=1 _. " + cn +
                "])",
            true);
}

TranscriptionCase univ_hcom_fcom() {
  string Bs = "(z. dapp B z)";
  auto B = [](const string& z) { return "(dapp B " + z + ")"; };
  auto P = [&](const string& z) {
    return "(hcom " + B(z) + " r ~> r' (coe " + Bs + " s' ~> " + z + " M) [x=0 y. coe " + Bs + " s' ~> " + z +
           " (dapp N y)])";
  };
  auto F = [&](const string& c, const string& z) {
    return "(hcom A s' ~> " + z + " (cap s ~> s' " + c + " [u=0 z. dapp B z]) [u=0 z1. coe " + Bs + " z1 ~> s (coe " +
           Bs + " s' ~> z1 " + c + ")])";
  };
  string O = "(hcom A r ~> r' " + F("M", "s") + " [x=0 y. " + F("(dapp N y)", "s") + "])";
  string Q = "(hcom A s ~> s' " + O + " [x=0 z. " + F("(dapp N r')", "z") + "] [u=0 z. coe " + Bs + " z ~> s " +
             P("z") + "] [r=r' z. " + F("M", "z") + "])";
  return to("univ/hcom-fcom", "hcom (fcom s ~> s' A [u=0 z. dapp B z]) r ~> r' M [x=0 y. dapp N y]",
            "box s ~> s' " + Q + " [u=0 " + P("s'") + "]", false);
}

TranscriptionCase univ_coe_fcom() {
  auto B = [](int i, const string& x, const string& z) {
    return "(dapp (dapp B" + std::to_string(i) + " " + x + ") " + z + ")";
  };
  auto Bs = [&](int i, const string& x) { return "(z. " + B(i, x, "z") + ")"; };
  auto N = [&](int i, const string& x, const string& z) {
    return "(coe " + Bs(i, x) + " s' ~> " + z + " (coe (x. " + B(i, "x", "s'") + ") r ~> " + x + " M))";
  };
  auto O = [&](const string& x, const string& z) {
    return "(hcom (dapp A " + x + ") s' ~> " + z + " (cap s ~> s' M [u=0 z. " + B(0, x, "z") + "] [" + x + "=0 z. " +
           B(1, x, "z") + "]) [u=0 z1. coe " + Bs(0, x) + " z1 ~> s " + N(0, x, "z1") + "] [" + x +
           "=0 z1. coe " + Bs(1, x) + " z1 ~> s " + N(1, x, "z1") + "])";
  };
  string P = "(gcom (x. dapp A x) r ~> r' " + O("r", "s") + " [u=0 x. " + N(0, "x", "s") +
             "] [s=s' x. coe (x. dapp A x) r ~> x M])";
  auto Q = [&](int k, const string& z) {
    return "(gcom (z. " + B(k, "r'", "z") + ") s ~> " + z + " " + P + " [u=0 z1. " + N(0, "r'", "z1") +
           "] [r=r' z1. " + N(k, "r'", "z1") + "])";
  };
  string body = "(hcom (dapp A r') s ~> s' " + P + " [u=0 z. coe " + Bs(0, "r'") + " z ~> s " + Q(0, "z") +
                "] [r'=0 z. coe " + Bs(1, "r'") + " z ~> s " + Q(1, "z") + "] [r=r' z. " + O("r", "z") + "])";
  return to("univ/coe-fcom",
            "coe (x. fcom s ~> s' (dapp A x) [u=0 z. " + B(0, "x", "z") + "] [x=0 z. " + B(1, "x", "z") +
                "]) r ~> r' M",
            "box s ~> s' " + body + " [u=0 " + Q(0, "s'") + "] [r'=0 " + Q(1, "s'") + "]", false);
}

std::vector<TranscriptionCase> build() {
  const string tube = "[x=0 y. dapp N y]";
  std::vector<TranscriptionCase> cs = {
      // Types
      val("types/pi-val", "pi (a : A) (app B a)", true),
      val("types/sg-val", "sg (a : A) (app B a)", true),
      val("types/path-val", "path (x. dapp A x) P0 P1", true),
      val("types/eq-val", "eq A M N", true),
      val("types/void-val", "void", true),
      val("types/nat-val", "nat", true),
      val("types/bool-val", "bool", true),
      val("types/wbool-val", "wbool", true),
      val("types/S1-val", "S1", true),
      val("types/upre-val", "U pre 0", true),
      val("types/ukan-val", "U kan 4", true),
      val("types/V-val", "V x A B E", false),
      to("types/V-0", "V 0 A B E", "A", true),
      to("types/V-1", "V 1 A B E", "B", true),

      // Kan operations
      to("kan/hcom-cong", "hcom (V 0 A B E) r ~> s M " + tube, "hcom A r ~> s M " + tube, true),
      to("kan/coe-cong", "coe (x. V 0 (dapp A x) B E) r ~> s M", "coe (x. dapp A x) r ~> s M", true),
      to("kan/com", "com (y. dapp A y) r ~> s M " + tube,
         "hcom (dapp A s) r ~> s (coe (y. dapp A y) r ~> s M) [x=0 y. coe (z. dapp A z) y ~> s (dapp N y)]", true),
      to("kan/fcom-eq", "fcom r ~> r M " + tube, "M", true),
      to("kan/fcom-tube", "fcom r ~> s M [x=0 y. dapp N0 y] [x=x y. dapp N1 y] [1=1 y. dapp N2 y]", "dapp N1 s",
         false),
      val("kan/fcom-val", "fcom r ~> s M [x=0 y. dapp N0 y] [x=1 y. dapp N1 y]", false),
      to("kan/ghcom-nil", "ghcom A r ~> s M", "M", true),
      to("kan/ghcom-cons", "ghcom A r ~> s M [x=t y. dapp N y]",
         "hcom A r ~> s M"
         " [x=0 z. hcom A r ~> z M [t=0 y. dapp N y] [t=1 y. ghcom A r ~> y M]]"
         " [x=1 z. hcom A r ~> z M [t=1 y. dapp N y] [t=0 y. ghcom A r ~> y M]]"
         " [x=t y. dapp N y]",
         true),
      to("kan/gcom", "gcom (y. dapp A y) r ~> s M " + tube,
         "ghcom (dapp A s) r ~> s (coe (y. dapp A y) r ~> s M) [x=0 y. coe (z. dapp A z) y ~> s (dapp N y)]", true),

      // Dependent functions
      val("fun/lam-val", "lam a. app M a", true),
      to("fun/app-cong", "app (fst (pair (lam a. app M a) P)) N", "app (lam a. app M a) N", true),
      to("fun/beta", "app (lam a. app M a) N", "app M N", true),
      to("fun/hcom", "hcom (pi (a : A) (app B a)) r ~> s M " + tube,
         "lam a. hcom (app B a) r ~> s (app M a) [x=0 y. app (dapp N y) a]", true),
      to("fun/coe", "coe (x. pi (a : dapp A x) (app (dapp B x) a)) r ~> s M",
         "lam a. coe (x. app (dapp B x) (coe (x. dapp A x) s ~> x a)) r ~> s (app M (coe (x. dapp A x) s ~> r a))",
         true),

      // Dependent pairs
      val("pair/pair-val", "pair M N", true),
      to("pair/fst-cong", "fst (app (lam a. a) P)", "fst P", true),
      to("pair/snd-cong", "snd (app (lam a. a) P)", "snd P", true),
      to("pair/fst-beta", "fst (pair M N)", "M", true),
      to("pair/snd-beta", "snd (pair M N)", "N", true),
      to("pair/hcom", "hcom (sg (a : A) (app B a)) r ~> s M " + tube,
         "pair (hcom A r ~> s (fst M) [x=0 y. fst (dapp N y)])"
         " (com (z. app B (hcom A r ~> z (fst M) [x=0 y. fst (dapp N y)])) r ~> s (snd M) [x=0 y. snd (dapp N y)])",
         true),
      to("pair/coe", "coe (x. sg (a : dapp A x) (app (dapp B x) a)) r ~> s M",
         "pair (coe (x. dapp A x) r ~> s (fst M))"
         " (coe (x. app (dapp B x) (coe (x. dapp A x) r ~> x (fst M))) r ~> s (snd M))",
         true),

      // Paths
      val("path/dlam-val", "dlam x. dapp P x", true),
      to("path/dapp-cong", "dapp (fst (pair (dlam x. dapp P x) Q)) r", "dapp (dlam x. dapp P x) r", true),
      to("path/beta", "dapp (dlam x. dapp P x) r", "dapp P r", true),
      to("path/hcom", "hcom (path (x. dapp A x) P0 P1) r ~> s M [t=0 y. dapp N y]",
         "dlam x. hcom (dapp A x) r ~> s (dapp M x) [x=0 _. P0] [x=1 _. P1] [t=0 y. dapp (dapp N y) x]", true),
      to("path/coe", "coe (y. path (x. dapp (dapp A y) x) (dapp P0 y) (dapp P1 y)) r ~> s M",
         "dlam x. com (y. dapp (dapp A y) x) r ~> s (dapp M x) [x=0 y. dapp P0 y] [x=1 y. dapp P1 y]", true),

      // Equality
      val("eq/star-val", "*", true),
      to("eq/hcom", "hcom (eq A P Q) r ~> s M " + tube, "*", true),

      // Natural numbers
      val("nat/zero-val", "zero", true),
      val("nat/suc-val", "suc M", true),
      to("nat/natrec-cong", "natrec (fst (pair zero P)) Z (n a. app (app S n) a)",
         "natrec zero Z (n a. app (app S n) a)", true),
      to("nat/natrec-zero", "natrec zero Z (n a. app (app S n) a)", "Z", true),
      to("nat/natrec-suc", "natrec (suc M) Z (n a. app (app S n) a)",
         "app (app S M) (natrec M Z (n a. app (app S n) a))", true),
      to("nat/hcom", "hcom nat r ~> s M " + tube, "M", true),
      to("nat/coe", "coe (x. nat) r ~> s M", "M", true),

      // Booleans
      val("bool/true-val", "true", true),
      val("bool/false-val", "false", true),
      to("bool/if-cong", "if (b. app A b) (fst (pair true P)) T F", "if (b. app A b) true T F", true),
      to("bool/if-true", "if (b. app A b) true T F", "T", true),
      to("bool/if-false", "if (b. app A b) false T F", "F", true),
      to("bool/hcom", "hcom bool r ~> s M " + tube, "M", true),
      to("bool/coe", "coe (x. bool) r ~> s M", "M", true),

      // Weak booleans
      to("wbool/hcom", "hcom wbool r ~> s M " + tube, "fcom r ~> s M " + tube, true),
      to("wbool/coe", "coe (x. wbool) r ~> s M", "M", true),
      to("wbool/if-fcom", "if (b. app A b) (fcom r ~> s M " + tube + ") T F",
         "com (z. app A (fcom r ~> z M " + tube + ")) r ~> s (if (b. app A b) M T F)"
         " [x=0 y. if (b. app A b) (dapp N y) T F]",
         false),

      // Circle
      val("circle/base-val", "base", true),
      val("circle/loop-val", "loop x", false),
      to("circle/loop-eps", "loop 1", "base", true),
      to("circle/hcom", "hcom S1 r ~> s M " + tube, "fcom r ~> s M " + tube, true),
      to("circle/coe", "coe (x. S1) r ~> s M", "M", true),
      to("circle/elim-cong", "S1elim (c. app A c) (fst (pair base Q)) P (x. dapp L x)",
         "S1elim (c. app A c) base P (x. dapp L x)", true),
      to("circle/elim-base", "S1elim (c. app A c) base P (x. dapp L x)", "P", true),
      to("circle/elim-loop", "S1elim (c. app A c) (loop w) P (x. dapp L x)", "dapp L w", false),
      to("circle/elim-fcom", "S1elim (c. app A c) (fcom r ~> s M " + tube + ") P (x. dapp L x)",
         "com (z. app A (fcom r ~> z M " + tube + ")) r ~> s (S1elim (c. app A c) M P (x. dapp L x))"
         " [x=0 y. S1elim (c. app A c) (dapp N y) P (x. dapp L x)]",
         false),

      // Univalence
      val("ua/vin-val", "Vin x M N", false),
      to("ua/vin-0", "Vin 0 M N", "M", true),
      to("ua/vin-1", "Vin 1 M N", "N", true),
      to("ua/vproj-0", "Vproj 0 M F", "app F M", true),
      to("ua/vproj-1", "Vproj 1 M F", "M", true),
      to("ua/vproj-cong", "Vproj x (fst (pair (Vin x M N) P)) F", "Vproj x (Vin x M N) F", false),
      to("ua/vproj-vin", "Vproj x (Vin x M N) F", "N", false),
      to("ua/hcom", "hcom (V x A B E) r ~> s M [t=0 y. dapp N y]",
         "Vin x (hcom A r ~> s M [t=0 y. dapp N y])"
         " (hcom B r ~> s (Vproj x M (fst E)) [t=0 y. Vproj x (dapp N y) (fst E)]"
         " [x=0 y. app (fst E) (hcom A r ~> y M [t=0 y. dapp N y])]"
         " [x=1 y. hcom B r ~> y M [t=0 y. dapp N y]])",
         false),
      to("ua/coe-0", "coe (x. V x (dapp A x) (dapp B x) (dapp E x)) 0 ~> s M",
         "Vin s M (coe (x. dapp B x) 0 ~> s (app (fst (dapp E 0)) M))", true),
      ua_coe_one(),
      ua_coe_name(),
      to("ua/coe-other", "coe (y. V x (dapp A y) (dapp B y) (dapp E y)) r ~> s M",
         "Vin x (coe (y. dapp A y) r ~> s M)"
         " (com (y. dapp B y) r ~> s (Vproj x M (fst (dapp E r)))"
         " [x=0 y. app (fst (dapp E y)) (coe (y. dapp A y) r ~> y M)]"
         " [x=1 y. coe (y. dapp B y) r ~> y M])",
         false),

      // Universes
      to("univ/hcom", "hcom (U kan 2) r ~> s M " + tube, "fcom r ~> s M " + tube, true),
      to("univ/coe", "coe (x. U pre 1) r ~> s M", "M", true),
      to("univ/box-eq", "box r ~> r M [x=0 N]", "M", true),
      to("univ/box-tube", "box r ~> s M [x=0 N0] [x=x N1] [0=0 N2]", "N1", false),
      val("univ/box-val", "box r ~> s M [x=0 N0] [x=1 N1]", false),
      to("univ/cap-eq", "cap r ~> r M [x=0 y. dapp B y]", "M", true),
      to("univ/cap-tube", "cap r ~> s M [x=0 y. dapp B0 y] [1=1 y. dapp B1 y]", "coe (y. dapp B1 y) s ~> r M", false),
      to("univ/cap-cong", "cap r ~> s (fst (pair M P)) [x=0 y. dapp B y]", "cap r ~> s M [x=0 y. dapp B y]", false),
      to("univ/cap-box", "cap r ~> s (box r ~> s M [x=0 N]) [x=0 y. dapp B y]", "M", false),
      univ_hcom_fcom(),
      univ_coe_fcom(),
  };
  return cs;
}

}  // namespace

const std::vector<TranscriptionCase>& transcription_cases() {
  static const std::vector<TranscriptionCase> cases = build();
  return cases;
}

CaseVerdict run_transcription(const TranscriptionCase& c) {
  try {
    Term in = parse(c.input);
    StepOutcome o = step(in);
    if (!c.expected) {
      ValueInfo v = is_val(in);
      if (!o.is_value() || !v.value) return {false, "expected a value, got " + (o.steps() ? "a step" : o.reason)};
      if (o.rule() != c.rule) return {false, "value judged by " + o.rule()};
      if (v.stable != c.stable) return {false, "stability flag mismatch"};
      return {true, ""};
    }
    if (!o.steps()) return {false, o.is_value() ? string("input is a value") : "stuck: " + o.reason};
    if (o.rules.front() != c.rule) return {false, "fired " + o.rule_chain()};
    if (o.stable != c.stable) return {false, string("stability flag is ") + (o.stable ? "stable" : "unstable")};
    Term want = parse(*c.expected);
    if (!(o.next == want)) return {false, "got   " + print(o.next) + "\nwant  " + print(want)};
    return {true, ""};
  } catch (const std::exception& e) {
    return {false, string("exception: ") + e.what()};
  }
}

}  // namespace ccl::testing
