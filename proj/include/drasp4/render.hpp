#pragma once

// Output in three formats. Text is the canonical form that the parser reads
// back; JSON carries exact rationals as decimal strings; LaTeX is for display
// only.

#include <string>
#include <string_view>

#include <json.hpp>

#include "drasp4/ambient.hpp"
#include "drasp4/gwa.hpp"
#include "drasp4/verify.hpp"

namespace drasp4 {

enum class Format { text, json, latex };

/// Throws std::invalid_argument for anything but text, json, latex.
Format parse_format(std::string_view s);

nlohmann::json to_json(const GaussRat& c);
nlohmann::json to_json(const Poly2& p);
nlohmann::json to_json(const RatFunc& f);
nlohmann::json to_json(const AmbientElem& u);
nlohmann::json to_json(const DraElem& u);
nlohmann::json to_json(const BasePoly& b);
nlohmann::json to_json(const GwaElem& u);
nlohmann::json to_json(const Limit& l);
nlohmann::json to_json(const Report& r);

std::string to_latex(const GaussRat& c);
std::string to_latex(const Poly2& p);
std::string to_latex(const RatFunc& f);
std::string to_latex(const AmbientElem& u);
std::string to_latex(const BasePoly& b);
std::string to_latex(const Limit& l);

/// Dispatches on the format; JSON is pretty-printed with two spaces.
template <class T>
std::string render(const T& v, Format f) {
  switch (f) {
    case Format::json:
      return to_json(v).dump(2);
    case Format::latex:
      if constexpr (requires { to_latex(v); }) return to_latex(v);
      [[fallthrough]];
    case Format::text:
      break;
  }
  if constexpr (requires { v.to_string(); })
    return v.to_string();
  else if constexpr (std::is_same_v<T, Report>)
    return render_text(v);
  else
    return to_string(v);
}

inline std::string to_latex(const DraElem& u) { return to_latex(u.elem()); }

}  // namespace drasp4
