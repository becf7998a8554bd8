// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0

#include "latgal/latgal.h"

#include <cstring>
#include <new>
#include <string>

#include "latgal/json_io.hpp"
#include "latgal/render.hpp"

using namespace latgal;

struct latgal_lattice {
  LatticePtr impl;
};
struct latgal_aggregation {
  SupAggregation impl;
};
struct latgal_context {
  ManyValuedContext impl;
};
struct latgal_family {
  ValueMapFamily impl;
};

namespace {

// The numeric values of ErrorKind and latgal_status are kept in lockstep.
static_assert(static_cast<int>(ErrorKind::IoError) == LATGAL_E_IO);
static_assert(static_cast<int>(ErrorKind::ParseError) == LATGAL_E_PARSE);
static_assert(static_cast<int>(ErrorKind::CycleError) == LATGAL_E_CYCLE);
static_assert(static_cast<int>(ErrorKind::NotALattice) == LATGAL_E_NOT_A_LATTICE);
static_assert(static_cast<int>(ErrorKind::NoBounds) == LATGAL_E_NO_BOUNDS);
static_assert(static_cast<int>(ErrorKind::SizeLimit) == LATGAL_E_SIZE_LIMIT);
static_assert(static_cast<int>(ErrorKind::UnknownLabel) == LATGAL_E_UNKNOWN_LABEL);
static_assert(static_cast<int>(ErrorKind::NotClosed) == LATGAL_E_NOT_CLOSED);
static_assert(static_cast<int>(ErrorKind::MissingBound) == LATGAL_E_MISSING_BOUND);
static_assert(static_cast<int>(ErrorKind::NotSupPreserving) ==
              LATGAL_E_NOT_SUP_PRESERVING);
static_assert(static_cast<int>(ErrorKind::BoundaryViolation) ==
              LATGAL_E_BOUNDARY_VIOLATION);
static_assert(static_cast<int>(ErrorKind::NotBinary) == LATGAL_E_NOT_BINARY);
static_assert(static_cast<int>(ErrorKind::InvalidArgument) ==
              LATGAL_E_INVALID_ARGUMENT);

thread_local std::string g_error_message;
thread_local std::string g_error_json;
thread_local latgal_status g_error_code = LATGAL_OK;

std::string json_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size() + 2);
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  return out;
}

void record_error(latgal_status code, const char* kind, const std::string& message) {
  g_error_code = code;
  g_error_message = message;
  g_error_json = concat("{\"error\":{\"kind\":\"", kind, "\",\"message\":\"",
                        json_escape(message), "\"}}");
}

template <typename Fn>
latgal_status guard(Fn&& fn) {
  try {
    fn();
    return LATGAL_OK;
  } catch (const Error& e) {
    auto code = static_cast<latgal_status>(static_cast<int>(e.kind()));
    record_error(code, error_kind_name(e.kind()), e.what());
    return code;
  } catch (const std::bad_alloc&) {
    record_error(LATGAL_E_SIZE_LIMIT, "SizeLimit", "out of memory");
    return LATGAL_E_SIZE_LIMIT;
  } catch (const std::exception& e) {
    record_error(LATGAL_E_INTERNAL, "Internal", e.what());
    return LATGAL_E_INTERNAL;
  }
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) fail(ErrorKind::InvalidArgument, what, " is null");
}

std::size_t or_default(std::size_t value, std::size_t fallback) {
  return value == 0 ? fallback : value;
}

}  // namespace

extern "C" {

int latgal_status_is_input_error(latgal_status status) {
  if (status == LATGAL_OK || status == LATGAL_E_INTERNAL) return 0;
  return is_input_error(static_cast<ErrorKind>(static_cast<int>(status))) ? 1 : 0;
}

const char* latgal_status_name(latgal_status status) {
  if (status == LATGAL_OK) return "Ok";
  if (status == LATGAL_E_INTERNAL) return "Internal";
  return error_kind_name(static_cast<ErrorKind>(static_cast<int>(status)));
}

const char* latgal_version(void) { return "0.1.0"; }

const char* latgal_last_error_message(void) { return g_error_message.c_str(); }

const char* latgal_last_error_json(void) { return g_error_json.c_str(); }

void latgal_string_free(char* text) { delete[] text; }

/* ---- lattices ---------------------------------------------------------- */

latgal_status latgal_lattice_load_file(const char* path, latgal_lattice** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new latgal_lattice{io::load_lattice_file(path)};
  });
}

latgal_status latgal_lattice_load_json(const char* json, latgal_lattice** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    *out = new latgal_lattice{io::parse_lattice_json(json)};
  });
}

void latgal_lattice_free(latgal_lattice* lattice) { delete lattice; }

latgal_status latgal_lattice_size(const latgal_lattice* lattice, size_t* out) {
  return guard([&] {
    require(lattice, "lattice");
    require(out, "out");
    *out = lattice->impl->size();
  });
}

latgal_status latgal_lattice_element(const latgal_lattice* lattice, size_t index,
                                     char** out_label) {
  return guard([&] {
    require(lattice, "lattice");
    require(out_label, "out_label");
    lattice->impl->check_index(static_cast<Index>(index));
    *out_label = copy_string(lattice->impl->label(static_cast<Index>(index)));
  });
}

latgal_status latgal_lattice_bottom(const latgal_lattice* lattice, char** out_label) {
  return guard([&] {
    require(lattice, "lattice");
    require(out_label, "out_label");
    *out_label = copy_string(lattice->impl->label(lattice->impl->bottom()));
  });
}

latgal_status latgal_lattice_top(const latgal_lattice* lattice, char** out_label) {
  return guard([&] {
    require(lattice, "lattice");
    require(out_label, "out_label");
    *out_label = copy_string(lattice->impl->label(lattice->impl->top()));
  });
}

latgal_status latgal_lattice_leq(const latgal_lattice* lattice, const char* x,
                                 const char* y, int* out) {
  return guard([&] {
    require(lattice, "lattice");
    require(x, "x");
    require(y, "y");
    require(out, "out");
    *out = lattice->impl->leq(lattice->impl->index_of(x),
                              lattice->impl->index_of(y))
               ? 1
               : 0;
  });
}

latgal_status latgal_lattice_join(const latgal_lattice* lattice, const char* x,
                                  const char* y, char** out_label) {
  return guard([&] {
    require(lattice, "lattice");
    require(x, "x");
    require(y, "y");
    require(out_label, "out_label");
    Index j = lattice->impl->join(lattice->impl->index_of(x),
                                  lattice->impl->index_of(y));
    *out_label = copy_string(lattice->impl->label(j));
  });
}

latgal_status latgal_lattice_meet(const latgal_lattice* lattice, const char* x,
                                  const char* y, char** out_label) {
  return guard([&] {
    require(lattice, "lattice");
    require(x, "x");
    require(y, "y");
    require(out_label, "out_label");
    Index m = lattice->impl->meet(lattice->impl->index_of(x),
                                  lattice->impl->index_of(y));
    *out_label = copy_string(lattice->impl->label(m));
  });
}

latgal_status latgal_lattice_to_json(const latgal_lattice* lattice, char** out) {
  return guard([&] {
    require(lattice, "lattice");
    require(out, "out");
    *out = copy_string(io::lattice_to_json(*lattice->impl));
  });
}

latgal_status latgal_lattice_dot(const latgal_lattice* lattice, char** out) {
  return guard([&] {
    require(lattice, "lattice");
    require(out, "out");
    *out = copy_string(render::lattice_dot(*lattice->impl));
  });
}

latgal_status latgal_lattice_tables_text(const latgal_lattice* lattice, int ansi,
                                         char** out) {
  return guard([&] {
    require(lattice, "lattice");
    require(out, "out");
    *out = copy_string(render::lattice_tables_text(*lattice->impl, ansi != 0));
  });
}

latgal_status latgal_lattice_tables_json(const latgal_lattice* lattice, char** out) {
  return guard([&] {
    require(lattice, "lattice");
    require(out, "out");
    *out = copy_string(io::lattice_tables_json(*lattice->impl));
  });
}

/* ---- aggregations ------------------------------------------------------ */

latgal_status latgal_agg_load_file(const char* path, latgal_aggregation** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new latgal_aggregation{io::load_aggregation_file(path)};
  });
}

void latgal_agg_free(latgal_aggregation* aggregation) { delete aggregation; }

latgal_status latgal_agg_arity(const latgal_aggregation* aggregation, size_t* out) {
  return guard([&] {
    require(aggregation, "aggregation");
    require(out, "out");
    *out = aggregation->impl.arity();
  });
}

latgal_status latgal_agg_describe_json(const latgal_aggregation* aggregation,
                                       char** out) {
  return guard([&] {
    require(aggregation, "aggregation");
    require(out, "out");
    const SupAggregation& agg = aggregation->impl;
    std::string components = io::maps_to_json(agg.components());
    *out = copy_string(concat("{\n  \"elements\": ", agg.host()->size(),
                              ",\n  \"arity\": ", agg.arity(),
                              ",\n  \"components\": ", components, "\n}"));
  });
}

latgal_status latgal_agg_eval(const latgal_aggregation* aggregation,
                              const char* const* labels, size_t count,
                              char** out_label) {
  return guard([&] {
    require(aggregation, "aggregation");
    require(labels, "labels");
    require(out_label, "out_label");
    const SupAggregation& agg = aggregation->impl;
    std::vector<Index> tuple;
    tuple.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      require(labels[i], "labels[i]");
      tuple.push_back(agg.host()->index_of(labels[i]));
    }
    *out_label = copy_string(agg.host()->label(agg.evaluate(tuple)));
  });
}

latgal_status latgal_agg_table_csv(const latgal_aggregation* aggregation,
                                   size_t max_elements, char** out) {
  return guard([&] {
    require(aggregation, "aggregation");
    require(out, "out");
    AggTable table = aggregation->impl.full_table(
        or_default(max_elements, kDefaultMaxElements));
    *out = copy_string(render::agg_table_csv(table));
  });
}

latgal_status latgal_agg_table_text(const latgal_aggregation* aggregation,
                                    size_t max_elements, int ansi, char** out) {
  return guard([&] {
    require(aggregation, "aggregation");
    require(out, "out");
    AggTable table = aggregation->impl.full_table(
        or_default(max_elements, kDefaultMaxElements));
    *out = copy_string(render::agg_table_text(table, ansi != 0));
  });
}

latgal_status latgal_agg_decompose_json(const latgal_aggregation* aggregation,
                                        size_t max_elements, char** out) {
  return guard([&] {
    require(aggregation, "aggregation");
    require(out, "out");
    AggTable table = aggregation->impl.full_table(
        or_default(max_elements, kDefaultMaxElements));
    std::vector<LatticeMap> parts = decompose(table);
    *out = copy_string(io::maps_to_json(parts));
  });
}

latgal_status latgal_agg_subdirect_json(const latgal_aggregation* aggregation,
                                        char** out) {
  return guard([&] {
    require(aggregation, "aggregation");
    require(out, "out");
    SubdirectEmbedding embedding =
        SubdirectEmbedding::birkhoff(aggregation->impl.host());
    SubdirectDecomposition decomposition =
        subdirect_decompose_aggregation(aggregation->impl, embedding);
    *out = copy_string(io::subdirect_to_json(decomposition));
  });
}

/* ---- many-valued contexts and concept analysis ------------------------- */

latgal_status latgal_context_load_file(const char* path, latgal_context** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new latgal_context{ManyValuedContext::load(path)};
  });
}

void latgal_context_free(latgal_context* context) { delete context; }

latgal_status latgal_family_load_file(const char* path, latgal_family** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new latgal_family{io::load_family_file(path)};
  });
}

void latgal_family_free(latgal_family* family) { delete family; }

latgal_status latgal_fca_concepts_json(const latgal_context* context,
                                       const latgal_family* family,
                                       size_t max_concepts, char** out) {
  return guard([&] {
    require(context, "context");
    require(family, "family");
    require(out, "out");
    auto concepts = enumerate_concepts(context->impl, family->impl,
                                       or_default(max_concepts, kDefaultMaxConcepts));
    *out = copy_string(
        io::concepts_to_json(context->impl, *family->impl.host(), concepts));
  });
}

latgal_status latgal_fca_lattice_dot(const latgal_context* context,
                                     const latgal_family* family,
                                     size_t max_concepts, char** out) {
  return guard([&] {
    require(context, "context");
    require(family, "family");
    require(out, "out");
    auto concepts = enumerate_concepts(context->impl, family->impl,
                                       or_default(max_concepts, kDefaultMaxConcepts));
    ConceptLattice lattice =
        ConceptLattice::build(family->impl.host(), std::move(concepts));
    *out = copy_string(render::concept_lattice_dot(context->impl, lattice));
  });
}

latgal_status latgal_fca_crisp_json(const latgal_context* context, char** out) {
  return guard([&] {
    require(context, "context");
    require(out, "out");
    auto concepts = crisp_concepts(context->impl);
    *out = copy_string(io::crisp_to_json(context->impl, concepts));
  });
}

} /* extern "C" */
