#ifndef MPAE_GENOTYPE_HPP
#define MPAE_GENOTYPE_HPP

#include "mpae/cell.hpp"
#include "mpae/ops.hpp"

#include <string>

namespace mpae {

// Human-readable genotype document, format "mpae-genotype v1":
//
//   mpae-genotype v1
//   segments: 1
//   nodes_per_segment: 4
//   ops: none,max_pool_3x3,...
//   bits: 01001...
//   segment 0 node 0: in0:sep_conv_3x3 n0:skip_connect
//   ...
//
// Sources are named in0/in1 for the cell inputs and n<i> for intermediate
// node i. The bit string is authoritative; the per-node lines restate it.
std::string serialize_genotype(const Genome& genome, const OpVocabulary& vocab);

// Parses the document back into a genome; the per-node lines must agree
// with the bit string.
Genome parse_genotype(const std::string& text, const CellShape& shape);

} // namespace mpae

#endif
