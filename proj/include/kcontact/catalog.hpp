#pragma once

#include <string>
#include <vector>

#include "kcontact/io.hpp"

namespace kcontact {

enum class EntryKind { contact, symplectic };

struct CatalogEntry {
  std::string name;
  std::string description;
  EntryKind kind;
  /// Contact entries carry form "eta" and possibly metric "g"; symplectic
  /// entries carry form "omega".
  Document document;
};

/// Built-in examples, in a fixed order.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry* find_catalog_entry(const std::string& name);

/// An existing file path, otherwise a catalog name.
Document resolve_document(const std::string& file_or_name);

}  // namespace kcontact
