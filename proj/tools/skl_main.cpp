#include "skl/cli_app.hpp"

int main(int argc, char** argv) { return skl::cli_main(argc, argv); }
