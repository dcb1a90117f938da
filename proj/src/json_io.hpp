#pragma once

#include "json.hpp"
#include "kcontact/io.hpp"

namespace kcontact {

using ordered_json = nlohmann::ordered_json;

ordered_json document_json(const Document& doc);
ordered_json vector_json(const Vector& v);
ordered_json form_json(const AlternatingForm& f);

}  // namespace kcontact
