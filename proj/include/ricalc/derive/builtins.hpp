#pragma once
#include <optional>
#include <string>
#include <vector>

#include "proof.hpp"

namespace ricalc::der {

namespace detail {

inline const char* const kBuiltinProofs = R"JSON([
{"name": "hashing2-from-mother",
 "target": "<rho> + I(A;E)@psi [c->c] + o[qq] >= Icoh(A>B)@psi [qq]",
 "contexts": ["pure psi on A,B,E", "fact Icoh(A>B)@psi >= 0"],
 "steps": [
  {"id": "m", "rule": "axiom", "instantiation": {"name": "mother"},
   "conclusion": "<rho> + 1/2 I(A;E)@psi [q->q] >= 1/2 I(A;B)@psi [qq]"},
  {"id": "tp", "rule": "axiom", "instantiation": {"name": "tp"}, "conclusion": "2[c->c] + [qq] >= [q->q]"},
  {"id": "tp2", "rule": "scaling", "premises": ["tp"], "instantiation": {"factor": "1/2 I(A;E)@psi"},
   "conclusion": "I(A;E)@psi [c->c] + 1/2 I(A;E)@psi [qq] >= 1/2 I(A;E)@psi [q->q]"},
  {"id": "r", "rule": "reflexivity", "instantiation": {"expr": "<rho>"}, "conclusion": "<rho> >= <rho>"},
  {"id": "a", "rule": "addition", "premises": ["tp2", "r"],
   "conclusion": "<rho> + I(A;E)@psi [c->c] + 1/2 I(A;E)@psi [qq] >= <rho> + 1/2 I(A;E)@psi [q->q]"},
  {"id": "t", "rule": "transitivity", "premises": ["a", "m"],
   "conclusion": "<rho> + I(A;E)@psi [c->c] + 1/2 I(A;E)@psi [qq] >= 1/2 I(A;B)@psi [qq]"},
  {"id": "c", "rule": "cancellation", "premises": ["t"], "instantiation": {"gamma": "1/2 I(A;E)@psi [qq]"},
   "conclusion": "<rho> + I(A;E)@psi [c->c] + o[qq] >= Icoh(A>B)@psi [qq]"}
 ]},
{"name": "ntp2",
 "target": "<rho> + I(A;B)@psi [c->c] + o[qq] >= Icoh(A>B)@psi [q->q]",
 "contexts": ["pure psi on A,B,E", "fact Icoh(A>B)@psi >= 0"],
 "steps": [
  {"id": "h", "rule": "lemma", "instantiation": {"name": "hashing2-from-mother"},
   "conclusion": "<rho> + I(A;E)@psi [c->c] + o[qq] >= Icoh(A>B)@psi [qq]"},
  {"id": "tp", "rule": "axiom", "instantiation": {"name": "tp"}, "conclusion": "2[c->c] + [qq] >= [q->q]"},
  {"id": "tpi", "rule": "scaling", "premises": ["tp"], "instantiation": {"factor": "Icoh(A>B)@psi"},
   "conclusion": "2 Icoh(A>B)@psi [c->c] + Icoh(A>B)@psi [qq] >= Icoh(A>B)@psi [q->q]"},
  {"id": "r", "rule": "reflexivity", "instantiation": {"expr": "2 Icoh(A>B)@psi [c->c]"},
   "conclusion": "2 Icoh(A>B)@psi [c->c] >= 2 Icoh(A>B)@psi [c->c]"},
  {"id": "a", "rule": "addition", "premises": ["h", "r"],
   "conclusion": "<rho> + I(A;B)@psi [c->c] + o[qq] >= Icoh(A>B)@psi [qq] + 2 Icoh(A>B)@psi [c->c]"},
  {"id": "t", "rule": "transitivity", "premises": ["a", "tpi"],
   "conclusion": "<rho> + I(A;B)@psi [c->c] + o[qq] >= Icoh(A>B)@psi [q->q]"}
 ]},
{"name": "nsd-from-mother",
 "target": "<rho> + H(A)@psi [q->q] >= I(A;B)@psi [c->c]",
 "contexts": ["pure psi on A,B,E"],
 "steps": [
  {"id": "m", "rule": "axiom", "instantiation": {"name": "mother"},
   "conclusion": "<rho> + 1/2 I(A;E)@psi [q->q] >= 1/2 I(A;B)@psi [qq]"},
  {"id": "r", "rule": "reflexivity", "instantiation": {"expr": "1/2 I(A;B)@psi [q->q]"},
   "conclusion": "1/2 I(A;B)@psi [q->q] >= 1/2 I(A;B)@psi [q->q]"},
  {"id": "a", "rule": "addition", "premises": ["m", "r"],
   "conclusion": "<rho> + H(A)@psi [q->q] >= 1/2 I(A;B)@psi [q->q] + 1/2 I(A;B)@psi [qq]"},
  {"id": "sd", "rule": "axiom", "instantiation": {"name": "sd"}, "conclusion": "[q->q] + [qq] >= 2[c->c]"},
  {"id": "sdi", "rule": "scaling", "premises": ["sd"], "instantiation": {"factor": "1/2 I(A;B)@psi"},
   "conclusion": "1/2 I(A;B)@psi [q->q] + 1/2 I(A;B)@psi [qq] >= I(A;B)@psi [c->c]"},
  {"id": "t", "rule": "transitivity", "premises": ["a", "sdi"],
   "conclusion": "<rho> + H(A)@psi [q->q] >= I(A;B)@psi [c->c]"}
 ]},
{"name": "eac-from-father",
 "target": "<N:*> + H(R)@psi [qq] >= I(R;B)@psi [c->c]",
 "contexts": ["pure psi on R,B,E"],
 "steps": [
  {"id": "f", "rule": "axiom", "instantiation": {"name": "father"},
   "conclusion": "<N:*> + 1/2 I(R;E)@psi [qq] >= 1/2 I(R;B)@psi [q->q]"},
  {"id": "r", "rule": "reflexivity", "instantiation": {"expr": "1/2 I(R;B)@psi [qq]"},
   "conclusion": "1/2 I(R;B)@psi [qq] >= 1/2 I(R;B)@psi [qq]"},
  {"id": "a", "rule": "addition", "premises": ["f", "r"],
   "conclusion": "<N:*> + H(R)@psi [qq] >= 1/2 I(R;B)@psi [q->q] + 1/2 I(R;B)@psi [qq]"},
  {"id": "sd", "rule": "axiom", "instantiation": {"name": "sd"}, "conclusion": "[q->q] + [qq] >= 2[c->c]"},
  {"id": "sdi", "rule": "scaling", "premises": ["sd"], "instantiation": {"factor": "1/2 I(R;B)@psi"},
   "conclusion": "1/2 I(R;B)@psi [q->q] + 1/2 I(R;B)@psi [qq] >= I(R;B)@psi [c->c]"},
  {"id": "t", "rule": "transitivity", "premises": ["a", "sdi"],
   "conclusion": "<N:*> + H(R)@psi [qq] >= I(R;B)@psi [c->c]"}
 ]},
{"name": "lsd-from-father",
 "target": "<N:*> + o[qq] >= Icoh(R>B)@psi [q->q]",
 "contexts": ["pure psi on R,B,E", "fact Icoh(R>B)@psi >= 0"],
 "steps": [
  {"id": "f", "rule": "axiom", "instantiation": {"name": "father"},
   "conclusion": "<N:*> + 1/2 I(R;E)@psi [qq] >= 1/2 I(R;B)@psi [q->q]"},
  {"id": "ed", "rule": "axiom", "instantiation": {"name": "entanglement-distribution"}, "conclusion": "[q->q] >= [qq]"},
  {"id": "edi", "rule": "scaling", "premises": ["ed"], "instantiation": {"factor": "1/2 I(R;E)@psi"},
   "conclusion": "1/2 I(R;E)@psi [q->q] >= 1/2 I(R;E)@psi [qq]"},
  {"id": "r", "rule": "reflexivity", "instantiation": {"expr": "Icoh(R>B)@psi [q->q]"},
   "conclusion": "Icoh(R>B)@psi [q->q] >= Icoh(R>B)@psi [q->q]"},
  {"id": "a", "rule": "addition", "premises": ["edi", "r"],
   "conclusion": "1/2 I(R;B)@psi [q->q] >= 1/2 I(R;E)@psi [qq] + Icoh(R>B)@psi [q->q]"},
  {"id": "t", "rule": "transitivity", "premises": ["f", "a"],
   "conclusion": "<N:*> + 1/2 I(R;E)@psi [qq] >= 1/2 I(R;E)@psi [qq] + Icoh(R>B)@psi [q->q]"},
  {"id": "c", "rule": "cancellation", "premises": ["t"], "instantiation": {"gamma": "1/2 I(R;E)@psi [qq]"},
   "conclusion": "<N:*> + o[qq] >= Icoh(R>B)@psi [q->q]"}
 ]},
{"name": "ntp-from-hashing",
 "target": "<rho> + I(A;B)@psi [c->c] >= Icoh(A>B)@psi [q->q]",
 "contexts": ["pure psi on A,B,E", "fact Icoh(A>B)@psi >= 0"],
 "steps": [
  {"id": "h", "rule": "axiom", "instantiation": {"name": "hashing"},
   "conclusion": "<rho> + I(A;E)@psi [c->c]{coh} >= Icoh(A>B)@psi [qq]"},
  {"id": "tp", "rule": "axiom", "instantiation": {"name": "tp"}, "conclusion": "2[c->c] + [qq] >= [q->q]"},
  {"id": "tpi", "rule": "scaling", "premises": ["tp"], "instantiation": {"factor": "Icoh(A>B)@psi"},
   "conclusion": "2 Icoh(A>B)@psi [c->c] + Icoh(A>B)@psi [qq] >= Icoh(A>B)@psi [q->q]"},
  {"id": "r", "rule": "reflexivity", "instantiation": {"expr": "2 Icoh(A>B)@psi [c->c]"},
   "conclusion": "2 Icoh(A>B)@psi [c->c] >= 2 Icoh(A>B)@psi [c->c]"},
  {"id": "a", "rule": "addition", "premises": ["h", "r"],
   "conclusion": "<rho> + I(A;B)@psi [c->c] >= Icoh(A>B)@psi [qq] + 2 Icoh(A>B)@psi [c->c]"},
  {"id": "t", "rule": "transitivity", "premises": ["a", "tpi"],
   "conclusion": "<rho> + I(A;B)@psi [c->c] >= Icoh(A>B)@psi [q->q]"}
 ]},
{"name": "crd-from-cqsw",
 "target": "<idXA.idB(rhoXS)> + H(X_A|B)@rho [c->c] >= H(X_A)@rho [cc]",
 "contexts": ["refines <<DXAXB.idB:rhoXS>> <<DXAXB:rhoX>>"],
 "steps": [
  {"id": "q", "rule": "axiom", "instantiation": {"name": "cqsw-copy", "labels": {"X_B": "X_A"}, "tags": {"sigma": "rho"}},
   "conclusion": "H(X_A|B)@rho [c->c] + <<idXA.idB:rhoXS>> >=s <<DXAXB.idB:rhoXS>>"},
  {"id": "p", "rule": "sopm", "premises": ["q"], "instantiation": {"item": 1},
   "conclusion": "H(X_A|B)@rho [c->c] + <<idXA.idB:rhoXS>> >= <<DXAXB.idB:rhoXS>>"},
  {"id": "r5", "rule": "relativize", "instantiation": {"item": 5, "from": "<<DXAXB.idB:rhoXS>>", "to": "<<DXAXB:rhoX>>"},
   "conclusion": "<<DXAXB.idB:rhoXS>> >= <<DXAXB:rhoX>>"},
  {"id": "t1", "rule": "transitivity", "premises": ["p", "r5"],
   "conclusion": "H(X_A|B)@rho [c->c] + <<idXA.idB:rhoXS>> >= <<DXAXB:rhoX>>"},
  {"id": "r2", "rule": "relativize", "instantiation": {"item": 2, "from": "<<DXAXB:rhoX>>", "to": "<DXAXB(rhoX)>"},
   "conclusion": "<<DXAXB:rhoX>> >= <DXAXB(rhoX)>"},
  {"id": "t2", "rule": "transitivity", "premises": ["t1", "r2"],
   "conclusion": "H(X_A|B)@rho [c->c] + <<idXA.idB:rhoXS>> >= <DXAXB(rhoX)>"},
  {"id": "crc", "rule": "axiom", "instantiation": {"name": "crc", "names": {"rho": "DXAXB(rhoX)"}, "labels": {"X_B": "X_A"}},
   "conclusion": "<DXAXB(rhoX)> >= H(X_A)@rho [cc]"},
  {"id": "t3", "rule": "transitivity", "premises": ["t2", "crc"],
   "conclusion": "H(X_A|B)@rho [c->c] + <<idXA.idB:rhoXS>> >= H(X_A)@rho [cc]"},
  {"id": "f", "rule": "source-fake", "premises": ["t3"], "instantiation": {"symbol": "<<idXA.idB:rhoXS>>"},
   "conclusion": "<idXA.idB(rhoXS)> + H(X_A|B)@rho [c->c] >= H(X_A)@rho [cc]"}
 ]},
{"name": "cqrsp",
 "target": "<<idXA.idA:rhoXS>> + H(B|Y_B)@sigma [q->q] + I(X_A;Y_B)@sigma [c->c] >=s <<idSB:rhoS>>",
 "contexts": ["iso idSB", "fact I(X_A;Y_B)@sigma > 0", "refines <<N'.idB:rhoXS>> <<idSB:rhoS>>"],
 "steps": [
  {"id": "crst", "rule": "axiom", "instantiation": {"name": "crst2", "names": {"rho": "rhoX"}},
   "conclusion": "I(X_A;Y_B)@sigma [c->c] + H(X_A|Y_B)@sigma [cc] >= <N':rhoX>"},
  {"id": "r3", "rule": "relativize",
   "instantiation": {"item": 3, "first": "<<idXA.idA:rhoXS>>", "second": "<N':rhoX>", "to": "<<N'.idA:rhoXS>>"},
   "conclusion": "<<idXA.idA:rhoXS>> + <N':rhoX> >= <<N'.idA:rhoXS>>"},
  {"id": "r", "rule": "reflexivity", "instantiation": {"expr": "<<idXA.idA:rhoXS>>"},
   "conclusion": "<<idXA.idA:rhoXS>> >= <<idXA.idA:rhoXS>>"},
  {"id": "a1", "rule": "addition", "premises": ["crst", "r"],
   "conclusion": "<<idXA.idA:rhoXS>> + I(X_A;Y_B)@sigma [c->c] + H(X_A|Y_B)@sigma [cc] >= <<idXA.idA:rhoXS>> + <N':rhoX>"},
  {"id": "t1", "rule": "transitivity", "premises": ["a1", "r3"],
   "conclusion": "<<idXA.idA:rhoXS>> + I(X_A;Y_B)@sigma [c->c] + H(X_A|Y_B)@sigma [cc] >= <<N'.idA:rhoXS>>"},
  {"id": "s", "rule": "axiom", "instantiation": {"name": "schumacher-cs"},
   "conclusion": "H(B|Y_B)@sigma [q->q] + <<N'.idA:rhoXS>> >= <<N'.idB:rhoXS>>"},
  {"id": "rq", "rule": "reflexivity", "instantiation": {"expr": "H(B|Y_B)@sigma [q->q]"},
   "conclusion": "H(B|Y_B)@sigma [q->q] >= H(B|Y_B)@sigma [q->q]"},
  {"id": "a2", "rule": "addition", "premises": ["t1", "rq"],
   "conclusion": "<<idXA.idA:rhoXS>> + H(B|Y_B)@sigma [q->q] + I(X_A;Y_B)@sigma [c->c] + H(X_A|Y_B)@sigma [cc] >= H(B|Y_B)@sigma [q->q] + <<N'.idA:rhoXS>>"},
  {"id": "t2", "rule": "transitivity", "premises": ["a2", "s"],
   "conclusion": "<<idXA.idA:rhoXS>> + H(B|Y_B)@sigma [q->q] + I(X_A;Y_B)@sigma [c->c] + H(X_A|Y_B)@sigma [cc] >= <<N'.idB:rhoXS>>"},
  {"id": "r5", "rule": "relativize", "instantiation": {"item": 5, "from": "<<N'.idB:rhoXS>>", "to": "<<idSB:rhoS>>"},
   "conclusion": "<<N'.idB:rhoXS>> >= <<idSB:rhoS>>"},
  {"id": "t3", "rule": "transitivity", "premises": ["t2", "r5"],
   "conclusion": "<<idXA.idA:rhoXS>> + H(B|Y_B)@sigma [q->q] + I(X_A;Y_B)@sigma [c->c] + H(X_A|Y_B)@sigma [cc] >= <<idSB:rhoS>>"},
  {"id": "cr", "rule": "axiom", "instantiation": {"name": "cbit-rbit"}, "conclusion": "[c->c] >= [cc]"},
  {"id": "d", "rule": "derandomize", "premises": ["t3", "cr"],
   "conclusion": "<<idXA.idA:rhoXS>> + H(B|Y_B)@sigma [q->q] + I(X_A;Y_B)@sigma [c->c] >= <<idSB:rhoS>>"},
  {"id": "sp", "rule": "sopm", "premises": ["d"], "instantiation": {"item": 2, "symbol": "<<idXA.idA:rhoXS>>"},
   "conclusion": "<<idXA.idA:rhoXS>> + H(B|Y_B)@sigma [q->q] + I(X_A;Y_B)@sigma [c->c] + o<idXA.idA(rhoXS)> >=s <<idSB:rhoS>>"},
  {"id": "r2", "rule": "relativize", "instantiation": {"item": 2, "from": "<<idXA.idA:rhoXS>>", "to": "<idXA.idA(rhoXS)>"},
   "conclusion": "<<idXA.idA:rhoXS>> >= <idXA.idA(rhoXS)>"},
  {"id": "n", "rule": "o-removal", "premises": ["sp", "r2"], "instantiation": {"symbol": "<idXA.idA(rhoXS)>"},
   "conclusion": "<<idXA.idA:rhoXS>> + H(B|Y_B)@sigma [q->q] + I(X_A;Y_B)@sigma [c->c] >=s <<idSB:rhoS>>"}
 ]},
{"name": "grandmother",
 "target": "<rho> + 1/2 I(A';EE'|X)@sigma [q->q] + I(X;BE)@sigma [c->c] >= 1/2 I(A';B|X)@sigma [qq]",
 "contexts": ["pure sx on A',B,E,E'", "pure sigma on A',B,E,E' given X", "fact I(A';EE'|X)@sigma > 0"],
 "steps": [
  {"id": "ic", "rule": "axiom", "instantiation": {"name": "ict2", "labels": {"R": "B,E", "X_B": "X"}, "names": {"rho": "rhoA"}},
   "conclusion": "I(X;BE)@sigma [c->c] + H(X|BE)@sigma [cc] >= <DT:rhoA>"},
  {"id": "r4", "rule": "relativize", "instantiation": {"item": 4, "static": "<rho>", "channel": "<DT:rhoA>", "to": "<DT(rho)>"},
   "conclusion": "<rho> + <DT:rhoA> >= <DT(rho)>"},
  {"id": "rr", "rule": "reflexivity", "instantiation": {"expr": "<rho>"}, "conclusion": "<rho> >= <rho>"},
  {"id": "a1", "rule": "addition", "premises": ["ic", "rr"],
   "conclusion": "<rho> + I(X;BE)@sigma [c->c] + H(X|BE)@sigma [cc] >= <rho> + <DT:rhoA>"},
  {"id": "t1", "rule": "transitivity", "premises": ["a1", "r4"],
   "conclusion": "<rho> + I(X;BE)@sigma [c->c] + H(X|BE)@sigma [cc] >= <DT(rho)>"},
  {"id": "m", "rule": "axiom",
   "instantiation": {"name": "mother", "tags": {"psi": "sx"}, "labels": {"A": "A'", "E": "E,E'"}, "names": {"rho": "DTx"}},
   "conclusion": "<DTx> + 1/2 I(A';EE')@sx [q->q] >= 1/2 I(A';B)@sx [qq]"},
  {"id": "cs", "rule": "convex-split", "premises": ["m"],
   "instantiation": {"static": "<DTx>", "mixture": "<DT(rho)>", "tag": "sx", "new_tag": "sigma", "given": "X"},
   "conclusion": "<DT(rho)> + 1/2 I(A';EE'|X)@sigma [q->q] >= 1/2 I(A';B|X)@sigma [qq]"},
  {"id": "rq", "rule": "reflexivity", "instantiation": {"expr": "1/2 I(A';EE'|X)@sigma [q->q]"},
   "conclusion": "1/2 I(A';EE'|X)@sigma [q->q] >= 1/2 I(A';EE'|X)@sigma [q->q]"},
  {"id": "a2", "rule": "addition", "premises": ["t1", "rq"],
   "conclusion": "<rho> + 1/2 I(A';EE'|X)@sigma [q->q] + I(X;BE)@sigma [c->c] + H(X|BE)@sigma [cc] >= <DT(rho)> + 1/2 I(A';EE'|X)@sigma [q->q]"},
  {"id": "t2", "rule": "transitivity", "premises": ["a2", "cs"],
   "conclusion": "<rho> + 1/2 I(A';EE'|X)@sigma [q->q] + I(X;BE)@sigma [c->c] + H(X|BE)@sigma [cc] >= 1/2 I(A';B|X)@sigma [qq]"},
  {"id": "qc", "rule": "axiom", "instantiation": {"name": "qubit-cbit"}, "conclusion": "[q->q] >= [c->c]"},
  {"id": "cr", "rule": "axiom", "instantiation": {"name": "cbit-rbit"}, "conclusion": "[c->c] >= [cc]"},
  {"id": "qr", "rule": "transitivity", "premises": ["qc", "cr"], "conclusion": "[q->q] >= [cc]"},
  {"id": "d", "rule": "derandomize", "premises": ["t2", "qr"],
   "conclusion": "<rho> + 1/2 I(A';EE'|X)@sigma [q->q] + I(X;BE)@sigma [c->c] >= 1/2 I(A';B|X)@sigma [qq]"}
 ]},
{"name": "ccc-identity",
 "target": "[q->qq] = 1/2 [q->q] + 1/2 [qq]",
 "contexts": [],
 "steps": [
  {"id": "csd", "rule": "axiom", "instantiation": {"name": "coherent-sd"}, "conclusion": "2[q->qq] + [qq] >= [q->q] + 2[qq]"},
  {"id": "c", "rule": "cancellation", "premises": ["csd"], "instantiation": {"gamma": "[qq]"},
   "conclusion": "2[q->qq] + o[qq] >= [q->q] + [qq]"},
  {"id": "ce", "rule": "axiom", "instantiation": {"name": "cobit-ebit"}, "conclusion": "[q->qq] >= [qq]"},
  {"id": "n", "rule": "o-removal", "premises": ["c", "ce"], "instantiation": {"symbol": "[qq]"},
   "conclusion": "2[q->qq] >= [q->q] + [qq]"},
  {"id": "ctp", "rule": "axiom", "instantiation": {"name": "coherent-tp"}, "conclusion": "[q->q] + [qq] >= 2[q->qq]"},
  {"id": "e", "rule": "antisymmetry", "premises": ["n", "ctp"], "conclusion": "2[q->qq] = [q->q] + [qq]"},
  {"id": "h", "rule": "scaling", "premises": ["e"], "instantiation": {"factor": "1/2"},
   "conclusion": "[q->qq] = 1/2 [q->q] + 1/2 [qq]"}
 ]},
{"name": "mother-from-hashing-ruleI",
 "target": "<rho> + 1/2 I(A;E)@psi [q->q] >= 1/2 I(A;B)@psi [qq]",
 "contexts": ["pure psi on A,B,E"],
 "steps": [
  {"id": "h", "rule": "axiom", "instantiation": {"name": "hashing"},
   "conclusion": "<rho> + I(A;E)@psi [c->c]{coh} >= Icoh(A>B)@psi [qq]"},
  {"id": "ab", "rule": "absolutize", "premises": ["h"], "instantiation": {"side": "lhs", "symbol": "[c->c]"},
   "conclusion": "<rho> + I(A;E)@psi [c->c:tau]{coh} >= Icoh(A>B)@psi [qq]"},
  {"id": "i", "rule": "rule-I", "premises": ["ab"],
   "conclusion": "<rho> + 1/2 I(A;E)@psi [q->q] >= 1/2 I(A;B)@psi [qq]"}
 ]},
{"name": "father-from-eac-ruleO",
 "target": "<N:*> + 1/2 I(R;E)@psi [qq] >= 1/2 I(R;B)@psi [q->q]",
 "contexts": ["pure psi on R,B,E"],
 "steps": [
  {"id": "e", "rule": "axiom", "instantiation": {"name": "eac"},
   "conclusion": "<N:rho> + H(R)@psi [qq] >= I(R;B)@psi [c->c]{coh}"},
  {"id": "o", "rule": "rule-O", "premises": ["e"],
   "conclusion": "<N:rho> + H(R)@psi [qq] >= 1/2 I(R;B)@psi [q->q] + 1/2 I(R;B)@psi [qq]"},
  {"id": "c", "rule": "cancellation", "premises": ["o"], "instantiation": {"gamma": "1/2 I(R;B)@psi [qq]"},
   "conclusion": "<N:rho> + 1/2 I(R;E)@psi [qq] >= 1/2 I(R;B)@psi [q->q]"},
  {"id": "r1", "rule": "relativize", "instantiation": {"item": 1, "from": "<N:*>", "to": "<N:rho>"}, "conclusion": "<N:*> >= <N:rho>"},
  {"id": "r", "rule": "reflexivity", "instantiation": {"expr": "1/2 I(R;E)@psi [qq]"},
   "conclusion": "1/2 I(R;E)@psi [qq] >= 1/2 I(R;E)@psi [qq]"},
  {"id": "a", "rule": "addition", "premises": ["r1", "r"],
   "conclusion": "<N:*> + 1/2 I(R;E)@psi [qq] >= <N:rho> + 1/2 I(R;E)@psi [qq]"},
  {"id": "t", "rule": "transitivity", "premises": ["a", "c"],
   "conclusion": "<N:*> + 1/2 I(R;E)@psi [qq] >= 1/2 I(R;B)@psi [q->q]"}
 ]},
{"name": "mother-from-nsd-ruleO",
 "target": "<rho> + 1/2 I(A;E)@psi [q->q] >= 1/2 I(A;B)@psi [qq]",
 "contexts": ["pure psi on A,B,E"],
 "steps": [
  {"id": "n", "rule": "axiom", "instantiation": {"name": "nsd"},
   "conclusion": "<rho> + H(A)@psi [q->q] >= I(A;B)@psi [c->c]{coh}"},
  {"id": "o", "rule": "rule-O", "premises": ["n"],
   "conclusion": "<rho> + H(A)@psi [q->q] >= 1/2 I(A;B)@psi [q->q] + 1/2 I(A;B)@psi [qq]"},
  {"id": "c", "rule": "cancellation", "premises": ["o"], "instantiation": {"gamma": "1/2 I(A;B)@psi [q->q]"},
   "conclusion": "<rho> + 1/2 I(A;E)@psi [q->q] >= 1/2 I(A;B)@psi [qq]"}
 ]},
{"name": "dct-ed",
 "target": "<rho> + (I(A';EE'|X)@sigma + I(X;BE)@sigma)[c->c] >= Icoh(A'>BX)@sigma [qq]",
 "contexts": ["pure sx on A',B,E,E'", "pure sigma on A',B,E,E' given X", "fact I(A';EE'|X)@sigma > 0",
              "fact Icoh(A'>BX)@sigma >= 0", "pure psi on A,B,E", "fact Icoh(A>B)@psi > 0"],
 "steps": [
  {"id": "g", "rule": "lemma", "instantiation": {"name": "grandmother"},
   "conclusion": "<rho> + 1/2 I(A';EE'|X)@sigma [q->q] + I(X;BE)@sigma [c->c] >= 1/2 I(A';B|X)@sigma [qq]"},
  {"id": "tp", "rule": "axiom", "instantiation": {"name": "tp"}, "conclusion": "2[c->c] + [qq] >= [q->q]"},
  {"id": "tpi", "rule": "scaling", "premises": ["tp"], "instantiation": {"factor": "1/2 I(A';EE'|X)@sigma"},
   "conclusion": "I(A';EE'|X)@sigma [c->c] + 1/2 I(A';EE'|X)@sigma [qq] >= 1/2 I(A';EE'|X)@sigma [q->q]"},
  {"id": "r", "rule": "reflexivity", "instantiation": {"expr": "<rho> + I(X;BE)@sigma [c->c]"},
   "conclusion": "<rho> + I(X;BE)@sigma [c->c] >= <rho> + I(X;BE)@sigma [c->c]"},
  {"id": "a", "rule": "addition", "premises": ["tpi", "r"],
   "conclusion": "<rho> + (I(A';EE'|X)@sigma + I(X;BE)@sigma)[c->c] + 1/2 I(A';EE'|X)@sigma [qq] >= <rho> + I(X;BE)@sigma [c->c] + 1/2 I(A';EE'|X)@sigma [q->q]"},
  {"id": "t", "rule": "transitivity", "premises": ["a", "g"],
   "conclusion": "<rho> + (I(A';EE'|X)@sigma + I(X;BE)@sigma)[c->c] + 1/2 I(A';EE'|X)@sigma [qq] >= 1/2 I(A';B|X)@sigma [qq]"},
  {"id": "c", "rule": "cancellation", "premises": ["t"], "instantiation": {"gamma": "1/2 I(A';EE'|X)@sigma [qq]"},
   "conclusion": "<rho> + (I(A';EE'|X)@sigma + I(X;BE)@sigma)[c->c] + o[qq] >= Icoh(A'>BX)@sigma [qq]"},
  {"id": "h", "rule": "axiom", "instantiation": {"name": "hashing"},
   "conclusion": "<rho> + I(A;E)@psi [c->c]{coh} >= Icoh(A>B)@psi [qq]"},
  {"id": "n", "rule": "o-removal", "premises": ["c", "h"], "instantiation": {"symbol": "[qq]"},
   "conclusion": "<rho> + (I(A';EE'|X)@sigma + I(X;BE)@sigma)[c->c] >= Icoh(A'>BX)@sigma [qq]"}
 ]},
{"name": "dct-ntp",
 "target": "<rho> + (I(A';B|X)@sigma + I(X;BE)@sigma)[c->c] >= Icoh(A'>BX)@sigma [q->q]",
 "contexts": ["pure sx on A',B,E,E'", "pure sigma on A',B,E,E' given X", "fact I(A';EE'|X)@sigma > 0",
              "fact Icoh(A'>BX)@sigma >= 0", "pure psi on A,B,E", "fact Icoh(A>B)@psi > 0",
              "fact I(A';B|X)@sigma > 0"],
 "steps": [
  {"id": "g", "rule": "lemma", "instantiation": {"name": "grandmother"},
   "conclusion": "<rho> + 1/2 I(A';EE'|X)@sigma [q->q] + I(X;BE)@sigma [c->c] >= 1/2 I(A';B|X)@sigma [qq]"},
  {"id": "tp", "rule": "axiom", "instantiation": {"name": "tp"}, "conclusion": "2[c->c] + [qq] >= [q->q]"},
  {"id": "tpi", "rule": "scaling", "premises": ["tp"], "instantiation": {"factor": "1/2 I(A';EE'|X)@sigma"},
   "conclusion": "I(A';EE'|X)@sigma [c->c] + 1/2 I(A';EE'|X)@sigma [qq] >= 1/2 I(A';EE'|X)@sigma [q->q]"},
  {"id": "r", "rule": "reflexivity", "instantiation": {"expr": "<rho> + I(X;BE)@sigma [c->c]"},
   "conclusion": "<rho> + I(X;BE)@sigma [c->c] >= <rho> + I(X;BE)@sigma [c->c]"},
  {"id": "a", "rule": "addition", "premises": ["tpi", "r"],
   "conclusion": "<rho> + (I(A';EE'|X)@sigma + I(X;BE)@sigma)[c->c] + 1/2 I(A';EE'|X)@sigma [qq] >= <rho> + I(X;BE)@sigma [c->c] + 1/2 I(A';EE'|X)@sigma [q->q]"},
  {"id": "t", "rule": "transitivity", "premises": ["a", "g"],
   "conclusion": "<rho> + (I(A';EE'|X)@sigma + I(X;BE)@sigma)[c->c] + 1/2 I(A';EE'|X)@sigma [qq] >= 1/2 I(A';B|X)@sigma [qq]"},
  {"id": "c", "rule": "cancellation", "premises": ["t"], "instantiation": {"gamma": "1/2 I(A';EE'|X)@sigma [qq]"},
   "conclusion": "<rho> + (I(A';EE'|X)@sigma + I(X;BE)@sigma)[c->c] + o[qq] >= Icoh(A'>BX)@sigma [qq]"},
  {"id": "tp2", "rule": "scaling", "premises": ["tp"], "instantiation": {"factor": "Icoh(A'>BX)@sigma"},
   "conclusion": "2 Icoh(A'>BX)@sigma [c->c] + Icoh(A'>BX)@sigma [qq] >= Icoh(A'>BX)@sigma [q->q]"},
  {"id": "r2", "rule": "reflexivity", "instantiation": {"expr": "2 Icoh(A'>BX)@sigma [c->c]"},
   "conclusion": "2 Icoh(A'>BX)@sigma [c->c] >= 2 Icoh(A'>BX)@sigma [c->c]"},
  {"id": "a2", "rule": "addition", "premises": ["c", "r2"],
   "conclusion": "<rho> + (I(A';B|X)@sigma + I(X;BE)@sigma)[c->c] + o[qq] >= Icoh(A'>BX)@sigma [qq] + 2 Icoh(A'>BX)@sigma [c->c]"},
  {"id": "t2", "rule": "transitivity", "premises": ["a2", "tp2"],
   "conclusion": "<rho> + (I(A';B|X)@sigma + I(X;BE)@sigma)[c->c] + o[qq] >= Icoh(A'>BX)@sigma [q->q]"},
  {"id": "h", "rule": "axiom", "instantiation": {"name": "hashing"},
   "conclusion": "<rho> + I(A;E)@psi [c->c]{coh} >= Icoh(A>B)@psi [qq]"},
  {"id": "n", "rule": "o-removal", "premises": ["t2", "h"], "instantiation": {"symbol": "[qq]"},
   "conclusion": "<rho> + (I(A';B|X)@sigma + I(X;BE)@sigma)[c->c] >= Icoh(A'>BX)@sigma [q->q]"}
 ]}
])JSON";

} // namespace detail

inline const std::vector<Proof>& builtin_derivations() {
    static const std::vector<Proof> proofs = [] {
        std::vector<Proof> out;
        for (const auto& j : json::parse(detail::kBuiltinProofs)) out.push_back(proof_from_json(j));
        return out;
    }();
    return proofs;
}

inline std::optional<Proof> find_builtin(const std::string& name) {
    for (const auto& p : builtin_derivations())
        if (p.name == name) return p;
    return std::nullopt;
}

inline CheckResult check_builtin(const Proof& p) { return check_proof(p, find_builtin); }

} // namespace ricalc::der
