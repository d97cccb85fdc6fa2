#ifndef MEREO_MORPHISMS_HPP
#define MEREO_MORPHISMS_HPP

#include "mereo/structures.hpp"

namespace mereo {

/// An arbitrary extensional function between two finite Boolean algebras,
/// indexed by element bits. Nothing is presumed; the DHLC/MVDHLC checkers
/// establish meet preservation and the rest.
struct MeetFunctionTable {
  AlgebraPtr domain;
  AlgebraPtr codomain;
  std::vector<std::uint32_t> table;  // one codomain element per domain element

  MeetFunctionTable(AlgebraPtr dom, AlgebraPtr cod,
                    std::vector<std::uint32_t> t);

  std::uint32_t operator()(std::uint32_t a) const { return table[a]; }
  bool operator==(const MeetFunctionTable& other) const {
    return domain->same_as(*other.domain) &&
           codomain->same_as(*other.codomain) && table == other.table;
  }
};

MeetFunctionTable identity_table(const AlgebraPtr& alg);
MeetFunctionTable table_of_hom(const CompleteHomomorphism& phi);

/// L-side morphism axioms, evaluated between local contact structures:
/// L1, L1p, L2, L3, LO, LOalt, LS, LSp, IS.
AxiomVerdict check_morphism_axiom(const CompleteHomomorphism& phi,
                                  const LocalContactStructure& src,
                                  const LocalContactStructure& dst,
                                  const std::string& id);

/// S-side morphism axioms, evaluated between MVD structures:
/// S1, S2, ES1, S3, SO, CS, LSpp, ISp.
AxiomVerdict check_morphism_axiom(const CompleteHomomorphism& phi,
                                  const MvdStructure& src,
                                  const MvdStructure& dst,
                                  const std::string& id);

const std::vector<std::string>& lside_axiom_ids();
const std::vector<std::string>& sside_axiom_ids();

/// DLC1-DLC5 for an arbitrary function table between local contact structures.
AxiomReport check_function_axioms(const MeetFunctionTable& psi,
                                  const LocalContactStructure& src,
                                  const LocalContactStructure& dst,
                                  const std::vector<std::string>& which = {});

/// MVDLC1-MVDLC5 between MVD structures.
AxiomReport check_function_axioms(const MeetFunctionTable& psi,
                                  const MvdStructure& src,
                                  const MvdStructure& dst,
                                  const std::vector<std::string>& which = {});

/// psi2 (.) psi1: join over {b bounded, b well inside a} in the FIRST
/// morphism's domain structure. Returned as a raw table; callers re-check
/// morphism-hood.
MeetFunctionTable compose_dhlc(const MeetFunctionTable& psi2,
                               const MeetFunctionTable& psi1,
                               const LocalContactStructure& first_domain);

/// psi2 (o) psi1: join over {b << a} in the first morphism's domain structure.
MeetFunctionTable compose_mvdhlc(const MeetFunctionTable& psi2,
                                 const MeetFunctionTable& psi1,
                                 const MvdStructure& first_domain);

struct CategoryFlag {
  std::string category;
  bool member = false;
};

struct Classification {
  AxiomReport axioms;  // every evaluated axiom, with witnesses
  bool injective = false;
  bool surjective = false;
  bool src_connected = false;
  bool dst_connected = false;
  std::vector<CategoryFlag> flags;

  bool member(const std::string& category) const {
    for (const auto& f : flags)
      if (f.category == category) return f.member;
    return false;
  }
};

Classification classify(const CompleteHomomorphism& phi,
                        const LocalContactStructure& src,
                        const LocalContactStructure& dst);
Classification classify(const CompleteHomomorphism& phi,
                        const MvdStructure& src, const MvdStructure& dst);
Classification classify(const MeetFunctionTable& psi,
                        const LocalContactStructure& src,
                        const LocalContactStructure& dst);
Classification classify(const MeetFunctionTable& psi, const MvdStructure& src,
                        const MvdStructure& dst);

/// (L-side, S-side) category names whose membership flags must agree under
/// the kappa transport.
const std::vector<std::pair<std::string, std::string>>& category_pairs();

}  // namespace mereo

#endif
