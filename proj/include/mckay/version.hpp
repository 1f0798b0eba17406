#ifndef MCKAY_VERSION_HPP_
#define MCKAY_VERSION_HPP_

namespace mckay {

  inline constexpr char const* version = "0.1.0";

}  // namespace mckay

#endif  // MCKAY_VERSION_HPP_
