#include "gibbslab/cli/config.hpp"

int main(int argc, char** argv) {
    return gibbslab::cli::cli_main(argc, argv);
}
