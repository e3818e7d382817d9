#pragma once

namespace bfsmc::detail {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace bfsmc::detail
